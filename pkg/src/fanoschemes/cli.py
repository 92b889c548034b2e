"""Command-line interface.

    python -m fanoschemes report --n 4 --d 5 --r 1 [--json]
    python -m fanoschemes class --d 3 --r 1 --abstract
    python -m fanoschemes table --lines | --planes
    python -m fanoschemes unirat --d 3 --r 1 [--overrides FILE] [--json]

Exit codes: 0 success, 2 usage or parse error, 3 domain precondition violated.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .combinatorics import MultiDegree, trim
from .invariants import Classification, FanoProblem, hodge_number, report, splitting_type
from .schubert import FanoClass, abstract_class, fano_class, fano_degree
from .unirationality import fano_unirationality_bound, load_overrides

EXIT_USAGE = 2
EXIT_DOMAIN = 3
WORKERS_ENV = "FANOSCHEMES_WORKERS"

TABLE_LINES = [  # (d, n), r = 1
    (3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (4, 6), (4, 7), (5, 4),
    (5, 5), (5, 6), (5, 7), (6, 5), (6, 6), (7, 5), (7, 6), (9, 6),
]
TABLE_PLANES = [  # (r, d, n)
    (2, 3, 6), (2, 3, 7), (2, 3, 8), (2, 4, 7), (2, 5, 9), (3, 3, 8), (3, 3, 9), (4, 3, 11),
]


class DomainError(Exception):
    pass


def parse_degrees(text: str) -> MultiDegree:
    """'2,2' -> MultiDegree((2, 2)); raises ArgumentTypeError naming the bad token."""
    tokens = [t.strip() for t in text.split(",")]
    degs = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad degree token {tok!r} in {text!r}") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"degree token {tok!r} must be >= 1")
        degs.append(value)
    return MultiDegree(tuple(degs))


def make_problem(n, d, r) -> FanoProblem:
    try:
        return FanoProblem(n, d, r)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _class_json(cls: FanoClass) -> list:
    return [{"lambda": list(trim(lam)), "coeff": str(c)} for lam, c in cls.terms()]


def report_json(p: FanoProblem) -> dict:
    rep = report(p)
    notes = []
    degree = None
    if rep.delta < 0:
        notes.append(f"degree omitted: delta = {rep.delta} < 0")
    else:
        degree = str(fano_degree(p))
    if rep.classification is Classification.QUADRIC_TWO_COMPONENTS:
        notes.append("n = 2r+1 on a quadric: F_r(X) has two connected components")
    notes.append("predicates report whether a sufficient bound holds, not whether the property fails")
    preds = {}
    for name, pr in rep.predicates.items():
        entry = {"holds": pr.holds, "bound": pr.bound}
        if pr.compared != "n":
            entry["compared"] = pr.compared
        if pr.value is not None:
            entry["value"] = pr.value
        preds[name] = entry
    return {
        "input": {"n": p.n, "d": list(p.d.degrees), "r": p.r},
        "invariants": {
            "delta": rep.delta,
            "delta_minus": rep.delta_minus,
            "classification": rep.classification.value,
            "canonical_twist": rep.canonical_twist,
            "fano_index": rep.fano_index,
            "is_fano": rep.is_fano,
        },
        "predicates": preds,
        "class": _class_json(fano_class(p)),
        "degree": degree,
        "notes": notes,
    }


def report_text(p: FanoProblem) -> str:
    data = report_json(p)
    inv = data["invariants"]
    lines = [
        f"F_{p.r}(X), X of multidegree ({p.d}) in P^{p.n}",
        f"  dim (delta)      {inv['delta']}",
        f"  delta_minus      {inv['delta_minus']}",
        f"  classification   {inv['classification']}",
        f"  canonical twist  O({inv['canonical_twist']})   fano index {inv['fano_index']}   fano {inv['is_fano']}",
        f"  degree           {data['degree'] if data['degree'] is not None else '-'}",
    ]
    terms = [f"{t['coeff']} s[{','.join(map(str, t['lambda']))}]" for t in data["class"]]
    lines.append(f"  class            {' + '.join(terms) or '0'}")
    lines.append("  bounds:")
    for name, pr in data["predicates"].items():
        extra = f"  value {pr['value']}" if "value" in pr else ""
        what = pr.get("compared", "n")
        lines.append(f"    {name:<28}{'yes' if pr['holds'] else 'no ':<5}({what} >= {pr['bound']}){extra}")
    if inv["delta"] >= 0:
        lines.append("  betti numbers:")
        for i in range(max(inv["delta_minus"], -1) + 1):
            h = hodge_number(p, i)
            tag = "=" if h.kind == "exact" else ">="
            lines.append(f"    b_{i} {tag} {h.value}")
        try:
            a, b = splitting_type(p)
            lines.append(f"  splitting type   O^{a} + O(1)^{b}")
        except ValueError:
            pass
    for note in data["notes"]:
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def _table_row_lines(args):
    d, n = args
    p = FanoProblem(n, (d,), 1)
    return d, n, report(p).delta, fano_degree(p)


def _table_row_planes(args):
    r, d, n = args
    p = FanoProblem(n, (d,), r)
    return r, d, n, report(p).delta, fano_degree(p)


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _map_rows(fn, rows):
    workers = _workers()
    if workers == 1:
        return [fn(row) for row in rows]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, rows))


def table_text(planes: bool) -> str:
    if planes:
        rows = _map_rows(_table_row_planes, TABLE_PLANES)
        header = ("r", "d", "n", "dim F", "deg F")
    else:
        rows = _map_rows(_table_row_lines, TABLE_LINES)
        header = ("d", "n", "dim F", "deg F")
    cells = [header] + [tuple(str(x) for x in row) for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    out = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(out) + "\n"


def unirat_json(bound) -> dict:
    return {
        "input": {"d": list(bound.d.degrees), "r": bound.r},
        "D": list(bound.D.degrees),
        "r_D": str(bound.r_D),
        "r1": str(bound.r1),
        "bound": str(bound.bound),
        "overrides_used": [{"d": list(k), "r": str(v)} for k, v in bound.overrides_used.items()],
    }


def unirat_text(bound) -> str:
    used = ", ".join(f"r({','.join(map(str, k))})={v}" for k, v in bound.overrides_used.items()) or "none"
    return (
        f"d = ({bound.d})  r = {bound.r}\n"
        f"D = ({bound.D})\n"
        f"r(D) = {bound.r_D}\n"
        f"r1 = {bound.r1}\n"
        f"n(d,r) = {bound.bound}\n"
        f"overrides used: {used}\n"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fanoschemes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("report", help="invariants, class and degree of one Fano scheme")
    rp.add_argument("--n", type=int, required=True)
    rp.add_argument("--d", type=parse_degrees, required=True, help="comma-separated degrees, e.g. 2,2")
    rp.add_argument("--r", type=int, required=True)
    rp.add_argument("--json", action="store_true")

    cp = sub.add_parser("class", help="Schubert decomposition of [F_r(X)]")
    cp.add_argument("--n", type=int)
    cp.add_argument("--d", type=parse_degrees, required=True)
    cp.add_argument("--r", type=int, required=True)
    cp.add_argument("--abstract", action="store_true", help="no rectangle truncation (n large)")
    cp.add_argument("--json", action="store_true")

    tp = sub.add_parser("table", help="degree tables for lines or higher planes on hypersurfaces")
    which = tp.add_mutually_exclusive_group(required=True)
    which.add_argument("--lines", action="store_true")
    which.add_argument("--planes", action="store_true")

    up = sub.add_parser("unirat", help="unirationality bound n(d, r)")
    up.add_argument("--d", type=parse_degrees, required=True)
    up.add_argument("--r", type=int, required=True)
    up.add_argument("--overrides", metavar="FILE")
    up.add_argument("--json", action="store_true")
    return parser


def run(args, out) -> None:
    if args.command == "report":
        p = make_problem(args.n, args.d, args.r)
        out.write(render_json(report_json(p)) if args.json else report_text(p))
    elif args.command == "class":
        if args.abstract:
            if args.r < 0:
                raise DomainError("r must be >= 0")
            cls = abstract_class(args.r, args.d)
            inp = {"n": None, "d": list(args.d.degrees), "r": args.r}
        else:
            if args.n is None:
                raise DomainError("class needs --n unless --abstract is given")
            p = make_problem(args.n, args.d, args.r)
            cls = fano_class(p)
            inp = {"n": p.n, "d": list(p.d.degrees), "r": p.r}
        if args.json:
            out.write(render_json({"input": inp, "class": _class_json(cls)}))
        else:
            out.write(cls.render() + "\n")
    elif args.command == "table":
        out.write(table_text(planes=args.planes))
    elif args.command == "unirat":
        overrides = None
        if args.overrides:
            try:
                overrides = load_overrides(args.overrides)
            except OSError as exc:
                raise DomainError(f"cannot read overrides: {exc}") from None
        try:
            bound = fano_unirationality_bound(args.d, args.r, overrides)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        out.write(render_json(unirat_json(bound)) if args.json else unirat_text(bound))


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args, sys.stdout)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        # overrides file syntax errors land here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
