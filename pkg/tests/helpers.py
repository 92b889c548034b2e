"""Shared test helpers."""
import random

from fanoschemes.invariants import FanoProblem, delta


def random_problems(count, seed=20240613, max_r=2, max_deg=4, max_s=2, max_n=9):
    """Distinct random problems with delta >= 0 in the given ranges."""
    rng = random.Random(seed)
    seen = []
    while len(seen) < count:
        r = rng.randint(0, max_r)
        s = rng.randint(1, max_s)
        d = tuple(rng.randint(1, max_deg) for _ in range(s))
        n = rng.randint(r + 1, max_n)
        p = FanoProblem(n, d, r)
        if delta(p) >= 0 and p not in seen:
            seen.append(p)
    return seen
