"""Random instances: degree-d monomial columns for A and products of powers
of (x-2), (x-1), x, (x+1), (x+2) for f."""

import random
from itertools import combinations_with_replacement
from math import comb
from typing import List

from .errors import InputError
from .exactmath import rank_exact

ROOTS = (2, 1, 0, -1, -2)


def monomials(n: int, d: int) -> List[List[int]]:
    """All exponent vectors of degree-d monomials in n variables, in a fixed order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(e)
    return out


def _factor(root: int, e: int) -> str:
    base = "x" if root == 0 else (f"(x-{root})" if root > 0 else f"(x+{-root})")
    return base if e == 1 else f"{base}^{e}"


def random_poly_text(rng: random.Random, k: int) -> str:
    parts = [_factor(root, e) for root in ROOTS for e in [rng.randint(0, k)] if e]
    return "*".join(parts) if parts else "1"


def generate(n: int, d: int, k: int, seed: int, max_tries: int = 1000) -> dict:
    """Instance document {"A": ..., "f": ...}; deterministic in ``seed``.

    Monomials are drawn without replacement when there are at least n+2 of
    them, otherwise with replacement (only n = 1, or n = 2 with d = 2).
    """
    if n < 1 or d < 1 or k < 0:
        raise InputError(f"impossible parameters n={n}, d={d}, k={k}")
    rng = random.Random(seed)
    pool = monomials(n, d)
    assert len(pool) == comb(n + d - 1, d)
    for _ in range(max_tries):
        if len(pool) >= n + 2:
            cols = rng.sample(pool, n + 2)
        else:
            cols = [rng.choice(pool) for _ in range(n + 2)]
        A = [[c[i] for c in cols] for i in range(n)]
        if rank_exact(A) == n:
            break
    else:
        raise InputError("could not draw a full-rank exponent matrix")
    f = [random_poly_text(rng, k) for _ in range(n + 2)]
    return {"A": A, "f": f}
