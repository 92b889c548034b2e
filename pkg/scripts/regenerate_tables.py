"""Print both degree tables and time them.

    python scripts/regenerate_tables.py
"""
import time

from fanoschemes.cli import table_text


def main():
    for planes in (False, True):
        start = time.perf_counter()
        text = table_text(planes)
        print(text)
        print(f"({time.perf_counter() - start:.2f}s)\n")


if __name__ == "__main__":
    main()
