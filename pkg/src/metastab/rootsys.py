"""Root systems of type A, B, C in the epsilon basis.

Coroot-like vectors are the duals H_alpha of the roots under the trace form
B_tr, for which <eta_i, eta_j> = delta_ij and H_{eps_i} = eta_i.  Hence a root
and its H-vector have the same coordinates, and <lambda, H_alpha> is the plain
dot product.

Type A_{n-1} is realised inside n coordinates; ``RootDatum("A", r)`` has Lie
rank r and ambient dimension r + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .errors import InvalidRoot, RankMismatch, SingularPoint, Unsupported
from .exactnum import as_fraction

Weight = tuple  # tuple of Fraction, epsilon coordinates


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C"):
            raise Unsupported(f"root system family {self.family!r} (only A, B, C)")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")

    @property
    def dim(self) -> int:
        """Number of epsilon coordinates."""
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self):
        return f"{self.family}_{self.rank}"


def _unit(n, i, c=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def positive_roots(rd: RootDatum) -> list[Weight]:
    """Positive roots, ordered eps_i - eps_j, eps_i + eps_j (i < j), then eps_i / 2eps_i.

    >>> [tuple(map(int, r)) for r in positive_roots(RootDatum("B", 2))]
    [(1, -1), (1, 1), (1, 0), (0, 1)]
    """
    n = rd.dim
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            minus = _unit(n, i)
            minus[j] = Fraction(-1)
            out.append(tuple(minus))
            if rd.family != "A":
                plus = _unit(n, i)
                plus[j] = Fraction(1)
                out.append(tuple(plus))
    if rd.family == "B":
        out.extend(tuple(_unit(n, i)) for i in range(n))
    elif rd.family == "C":
        out.extend(tuple(_unit(n, i, 2)) for i in range(n))
    return out


def all_roots(rd: RootDatum) -> list[Weight]:
    pos = positive_roots(rd)
    return pos + [tuple(-c for c in r) for r in pos]


def rho(rd: RootDatum) -> Weight:
    roots = positive_roots(rd)
    return tuple(sum((r[i] for r in roots), Fraction(0)) / 2 for i in range(rd.dim))


@lru_cache(maxsize=64)
def _root_set(rd: RootDatum) -> frozenset:
    return frozenset(all_roots(rd))


def coroot_btr(alpha: Sequence, rd: RootDatum) -> Weight:
    """H_alpha in the eta basis; equal coordinates to alpha under B_tr."""
    alpha = tuple(as_fraction(c) for c in alpha)
    if alpha not in _root_set(rd):
        raise InvalidRoot(f"{alpha} is not a root of {rd}")
    return alpha


def _pair(lam, h):
    return sum((a * b for a, b in zip(lam, h)), Fraction(0))


def varpi_factors(rd: RootDatum) -> list[Weight]:
    """The multiset of linear forms whose product is varpi."""
    return [coroot_btr(a, rd) for a in positive_roots(rd)]


def varpi_eval(rd: RootDatum, lam: Sequence, factors=None) -> Fraction:
    lam = tuple(as_fraction(c) for c in lam)
    if len(lam) != rd.dim:
        raise RankMismatch(f"weight of length {len(lam)} for {rd} (needs {rd.dim})")
    if factors is None:
        factors = varpi_factors(rd)
    return prod((_pair(lam, h) for h in factors), start=Fraction(1))


def lemma_2n_ratios(n: int) -> tuple[Fraction, Fraction]:
    """(varpi_C(rho_B)/varpi_C(rho_C), varpi_B(rho_B)/varpi_C(rho_C)) for rank n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    C, B = RootDatum("C", n), RootDatum("B", n)
    denom = varpi_eval(C, rho(C))
    return varpi_eval(C, rho(B)) / denom, varpi_eval(B, rho(B)) / denom


def exponents(rd: RootDatum) -> list[int]:
    if rd.family == "A":
        return list(range(1, rd.rank + 1))
    return list(range(1, 2 * rd.rank, 2))


def steinberg_rho_value(rd: RootDatum) -> Fraction:
    """2^{-(dim - rank)/2} * prod m! * prod B_tr(H_a, H_a) over positive roots."""
    if rd.family == "A":
        raise Unsupported("Steinberg's formula is only wired up for types B and C")
    roots = positive_roots(rd)
    norms = prod((_pair(h, h) for h in varpi_factors(rd)), start=Fraction(1))
    facts = prod(factorial(m) for m in exponents(rd))
    return Fraction(1, 2 ** len(roots)) * facts * norms


def weyl_order(rd: RootDatum) -> int:
    if rd.family == "A":
        return factorial(rd.rank + 1)
    return 2**rd.rank * factorial(rd.rank)


GROUP_KINDS = ("Sp", "SO", "GL", "U")
CONTEXTS = ("real-split", "nonarch-split", "compact")


def group_dim(kind: str, n: int) -> int:
    """Dimension of Sp(2n), SO(2n+1), GL(n) or U(n)."""
    if n < 0:
        raise ValueError("size parameter must be nonnegative")
    if kind in ("Sp", "SO"):
        return n * (2 * n + 1)
    if kind in ("GL", "U"):
        return n * n
    raise Unsupported(f"group kind {kind!r}")


def dim_and_q(kind: str, n: int, context: str) -> tuple[int, Fraction]:
    """(dim, q) for Sp(2n), SO(2n+1), GL(m), U(m) in a supported context."""
    if context not in CONTEXTS:
        raise Unsupported(f"context {context!r}")
    dim = group_dim(kind, n)
    if context == "compact":
        if kind == "GL":
            raise Unsupported("GL has no compact form")
        return dim, Fraction(0)
    if kind not in ("Sp", "SO"):
        raise Unsupported(f"q for {kind} in context {context!r} is not provided")
    if context == "real-split":
        return dim, Fraction(n * (n + 1), 2)
    return dim, Fraction(n)


def _character(alpha, t):
    val = Fraction(1)
    for c, ti in zip(alpha, t):
        val *= ti ** int(c)
    return val


def _check_torus_point(rd: RootDatum, t):
    t = tuple(as_fraction(x) for x in t)
    if len(t) != rd.dim:
        raise RankMismatch(f"torus point of length {len(t)} for {rd}")
    if any(x == 0 for x in t):
        raise SingularPoint("torus coordinates must be nonzero")
    return t


def weyl_discriminant(rd: RootDatum, t: Sequence) -> Fraction:
    """prod over all roots of (1 - alpha(t)) at a regular split torus point."""
    t = _check_torus_point(rd, t)
    out = Fraction(1)
    for alpha in all_roots(rd):
        xi = _character(alpha, t)
        if xi == 1:
            raise SingularPoint(f"root {alpha} takes the value 1 at {t}")
        out *= 1 - xi
    return out


def is_regular(rd: RootDatum, t: Sequence) -> bool:
    t = _check_torus_point(rd, t)
    return all(_character(a, t) != 1 for a in all_roots(rd))


def discriminant_ratio(n: int, t: Sequence) -> Fraction:
    """prod_i (1 + t_i)(1 + 1/t_i), the ratio D_C(t) / D_B(t).

    Defined by the closed form even where both discriminants vanish; at
    t = (1, ..., 1) it is 4^n.  Where t is regular for both types the quotient
    is recomputed from the discriminants and checked.
    """
    t = _check_torus_point(RootDatum("C", n), t)
    if any(x == -1 for x in t):
        raise SingularPoint("t_i = -1 makes the type-B discriminant vanish identically")
    value = prod(((1 + x) * (1 + 1 / x) for x in t), start=Fraction(1))
    if discriminant_ratio_kind(n, t) == "pointwise":
        quotient = weyl_discriminant(RootDatum("C", n), t) / weyl_discriminant(RootDatum("B", n), t)
        assert quotient == value, (t, quotient, value)
    return value


def discriminant_ratio_kind(n: int, t: Sequence) -> str:
    """'pointwise' when both discriminants are nonzero at t, else 'limit'."""
    C, B = RootDatum("C", n), RootDatum("B", n)
    return "pointwise" if is_regular(C, t) and is_regular(B, t) else "limit"


def germ_exponent(shape, unipotent: str = "identity") -> int:
    """dim G - dim G_u; only u = 1 is supported, where it vanishes."""
    if unipotent != "identity":
        raise Unsupported("only the identity unipotent class is supported")
    return 0
