"""Finite families of class parameters built from a fixed pool of factors.

The pool is closed under X -> -X, so every gamma corresponding to a delta
drawn from the pool is itself drawn from the pool.
"""

from __future__ import annotations

from itertools import product

from .classparam import SoClassParam, SpClassParam, UnitaryFactor
from .exactnum import PolyQ, poly_neg_arg

POOL_POLYS = (
    PolyQ([1, 0, 1]),           # X^2 + 1
    PolyQ([1, 1, 1]),           # X^2 + X + 1
    PolyQ([1, -1, 1]),          # X^2 - X + 1
    PolyQ([1, -3, 1]),          # X^2 - 3X + 1
    PolyQ([1, 3, 1]),           # X^2 + 3X + 1
    PolyQ([1, 1, 1, 1, 1]),     # Phi_5
    PolyQ([1, -1, 1, -1, 1]),   # Phi_10
    PolyQ([-2, 1]),             # X - 2  (split, partner X - 1/2)
    PolyQ([2, 1]),              # X + 2  (split, partner X + 1/2)
)

FACTOR_POOL = tuple(UnitaryFactor.of(p, 1, certified=True) for p in POOL_POLYS)


def pool_is_negation_closed(pool=FACTOR_POOL) -> bool:
    keys = {f.key for f in pool}
    return all(UnitaryFactor.of(poly_neg_arg(f.poly)).key in keys for f in pool)


def _rank_vectors(pool, budget):
    """Rank assignments (one per pool factor) with total effective degree <= budget."""
    out = [()]
    for f in pool:
        nxt = []
        for vec in out:
            used = sum(g.effective_degree * r for g, r in zip(pool, vec))
            r = 0
            while used + f.effective_degree * r <= budget:
                nxt.append(vec + (r,))
                r += 1
        out = nxt
    return out


def _factors(pool, vec):
    return tuple(f.with_rank(r) for f, r in zip(pool, vec) if r)


def sp_params(n: int, pool=FACTOR_POOL, field_only: bool = False) -> list[SpClassParam]:
    """Every valid Sp(2n) parameter with factors from the pool."""
    if field_only:
        pool = tuple(f for f in pool if f.kind == "field")
    out = []
    for vec in _rank_vectors(pool, 2 * n):
        fs = _factors(pool, vec)
        rest = 2 * n - sum(f.effective_degree * f.rank for f in fs)
        for w_plus in range(0, rest + 1, 2):
            out.append(SpClassParam(n, fs, w_plus, rest - w_plus))
    return out


def so_params(size: int, pool=FACTOR_POOL) -> list[SoClassParam]:
    """Every valid SO(size) parameter (size odd) with factors from the pool."""
    out = []
    for vec in _rank_vectors(pool, size - 1):
        fs = _factors(pool, vec)
        rest = size - sum(f.effective_degree * f.rank for f in fs)
        for v_minus in range(0, rest, 2):
            out.append(SoClassParam(size, fs, rest - v_minus, v_minus))
    return out


def bijection_inputs(delta: SpClassParam):
    """All (isecond, gl_second) choices for a delta: subsets of its field and split factors."""
    field_idx = [i for i, f in enumerate(delta.factors) if f.kind == "field"]
    split_idx = [i for i, f in enumerate(delta.factors) if f.kind == "split"]
    for fmask in product((False, True), repeat=len(field_idx)):
        isecond = tuple(i for i, m in zip(field_idx, fmask) if m)
        for smask in product((False, True), repeat=len(split_idx)):
            yield isecond, tuple(i for i, m in zip(split_idx, smask) if m)
