"""Brute-force oracles.

Nothing here calls the code paths it is meant to check: fibers are found by
matching eigenvalue multisets over an exhaustive enumeration, Hilbert symbols
by searching for points on the conic modulo p^k, group orders by counting
matrices.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

import numpy as np

from .exactnum import PolyQ, poly_neg_arg, poly_reciprocal, squarefree_part
from .families import FACTOR_POOL, so_params

_ONE = PolyQ([-1, 1])
_MINUS_ONE = PolyQ([1, 1])


def eigen_multiset(param) -> Counter:
    """Irreducible factors of the characteristic polynomial, read off the parameter."""
    c = Counter()
    for f in param.factors:
        c[f.poly] += f.rank
        if f.kind == "split":
            c[poly_reciprocal(f.poly)] += f.rank
    c[_ONE] += param.dim_plus
    c[_MINUS_ONE] += param.dim_minus
    return +c


def corresponding_multiset(gamma1, gamma2) -> Counter:
    """Eigenvalues of gamma' minus one 1, plus negatives of those of gamma'' minus one 1."""
    c1 = eigen_multiset(gamma1)
    c2 = eigen_multiset(gamma2)
    c1[_ONE] -= 1
    c2[_ONE] -= 1
    out = +c1
    for q, m in (+c2).items():
        out[poly_neg_arg(q)] += m
    return +out


def _freeze(c: Counter):
    return frozenset(c.items())


@lru_cache(maxsize=None)
def _fiber_table(nprime: int, nsecond: int, pool=FACTOR_POOL):
    table: dict = {}
    for g1 in so_params(2 * nprime + 1, pool):
        for g2 in so_params(2 * nsecond + 1, pool):
            table.setdefault(_freeze(corresponding_multiset(g1, g2)), []).append((g1, g2))
    return table


def fiber_oracle(delta, nprime: int, nsecond: int, pool=FACTOR_POOL) -> set:
    """All gamma pairs over the pool whose eigenvalue data matches delta."""
    return set(_fiber_table(nprime, nsecond, pool).get(_freeze(eigen_multiset(delta)), []))


def centralizer_dim(param, group: str) -> int:
    """dim of the centralizer from eigenvalue multiplicities over an algebraic closure."""
    c = eigen_multiset(param)
    pairs = sum(q.degree * m * m for q, m in c.items() if q not in (_ONE, _MINUS_ONE)) // 2
    a, b = c[_ONE], c[_MINUS_ONE]
    if group == "Sp":
        return pairs + (a // 2) * (a + 1) + (b // 2) * (b + 1)
    return pairs + a * (a - 1) // 2 + b * (b - 1) // 2


# ---------------------------------------------------------------------------
# local symbols


def quadratic_residues(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def legendre_oracle(a: int, p: int) -> int:
    if a % p == 0:
        return 0
    return 1 if a % p in quadratic_residues(p) else -1


def _squarefree_integer(x) -> int:
    from fractions import Fraction

    x = Fraction(x)
    return squarefree_part(x.numerator * x.denominator)


@lru_cache(maxsize=None)
def _conic_solvable(a: int, b: int, p: int) -> bool:
    # a, b squarefree, so v_p(a), v_p(b) <= 1.  A primitive solution mod p^k
    # lifts once k > 2 * min v(partials); primitive solutions have that
    # minimum <= 2 at p = 2, and for odd p a case check shows p^2 suffices.
    M = 32 if p == 2 else p * p
    sq = np.zeros(M, dtype=bool)
    z = np.arange(M, dtype=np.int64)
    sq[(z * z) % M] = True
    x = np.arange(M, dtype=np.int64)
    x2 = (x * x) % M
    vals = (a % M) * x2[:, None] + (b % M) * x2[None, :]
    vals %= M
    primitive = (x[:, None] % p != 0) | (x[None, :] % p != 0)
    return bool(np.any(sq[vals] & primitive))


def hilbert_oracle(a, b, p: int | None) -> int:
    """+1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_p (p=None: R)."""
    if p is None:
        return -1 if a < 0 and b < 0 else 1
    return 1 if _conic_solvable(_squarefree_integer(a), _squarefree_integer(b), p) else -1


# ---------------------------------------------------------------------------
# finite groups


def count_sl2(q: int) -> int:
    """|Sp(2, F_q)| = |SL(2, F_q)| by enumerating all 2x2 matrices (q prime)."""
    m = np.indices((q,) * 4).reshape(4, -1)
    det = (m[0] * m[3] - m[1] * m[2]) % q
    return int(np.count_nonzero(det == 1))


def count_so3(q: int) -> int:
    """|SO(3, F_q)| for the form x z + y^2, by enumerating all 3x3 matrices (q prime)."""
    Q = np.array([[0, 0, 1], [0, 2, 0], [1, 0, 0]])
    mats = np.indices((q,) * 9, dtype=np.int16).reshape(9, -1).T.reshape(-1, 3, 3).astype(np.int64)
    gram = np.einsum("nji,jk,nkl->nil", mats, Q, mats) % q
    ok = np.all(gram == Q % q, axis=(1, 2))
    cand = mats[ok]
    det = (cand[:, 0, 0] * (cand[:, 1, 1] * cand[:, 2, 2] - cand[:, 1, 2] * cand[:, 2, 1])
           - cand[:, 0, 1] * (cand[:, 1, 0] * cand[:, 2, 2] - cand[:, 1, 2] * cand[:, 2, 0])
           + cand[:, 0, 2] * (cand[:, 1, 0] * cand[:, 2, 1] - cand[:, 1, 1] * cand[:, 2, 0])) % q
    return int(np.count_nonzero(det == 1))


def count_hyperbolic_pairs(n: int, q: int) -> int:
    """Pairs (e, f) in F_q^{2n} with <e, f> = 1 for the standard symplectic form."""
    vecs = np.array(list(product(range(q), repeat=2 * n)), dtype=np.int64)
    J = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        J[i, n + i] = 1
        J[n + i, i] = -1
    form = (vecs @ J @ vecs.T) % q
    return int(np.count_nonzero(form == 1))


def count_sp(n: int, q: int) -> int:
    """|Sp(2n, F_q)| as (#hyperbolic pairs) * |Sp(2n-2, F_q)|, recursively."""
    if n == 0:
        return 1
    if n == 1:
        return count_sl2(q)
    return count_hyperbolic_pairs(n, q) * count_sp(n - 1, q)
