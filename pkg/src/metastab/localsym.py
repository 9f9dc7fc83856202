"""Places of Q, absolute values, Hilbert symbols and the Delta_0 sign.

Signs are plain ints +1 / -1.  The quadratic character of Q(sqrt d)/Q at a
place v is x -> (d, x)_v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .classparam import SpClassParam, char_poly, expand
from .errors import DegenerateInput, Unsupported
from .exactnum import (
    PolyQ,
    QuadElem,
    as_fraction,
    is_prime,
    is_squarefree,
    poly_eval,
    quadratic_root,
)


@dataclass(frozen=True)
class PlaceQ:
    """A place of Q: ``PlaceQ(None)`` is the real place, ``PlaceQ(p)`` is p-adic."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_infinite(self) -> bool:
        return self.p is None

    def __str__(self):
        return "inf" if self.p is None else str(self.p)

    def to_json(self):
        return "inf" if self.p is None else self.p

    @classmethod
    def from_json(cls, data) -> "PlaceQ":
        if data in ("inf", "infinity", "oo", None):
            return INF
        return cls(int(data))


INF = PlaceQ(None)


def valuation(x, p: int) -> int:
    x = as_fraction(x)
    if x == 0:
        raise DegenerateInput("valuation of 0")
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def abs_norm(x, v: PlaceQ) -> Fraction:
    x = as_fraction(x)
    if x == 0:
        raise DegenerateInput("|0|_v is excluded")
    if v.is_infinite:
        return abs(x)
    return Fraction(v.p) ** -valuation(x, v.p)


def relevant_places(*xs) -> list[PlaceQ]:
    """The real place and every prime dividing 2 or a numerator/denominator."""
    primes = {2}
    for x in xs:
        x = as_fraction(x)
        for m in (abs(x.numerator), x.denominator):
            q = 2
            while q * q <= m:
                while m % q == 0:
                    primes.add(q)
                    m //= q
                q += 1
            if m > 1:
                primes.add(m)
    return [INF] + [PlaceQ(p) for p in sorted(primes)]


def two_power_product(t: int) -> Fraction:
    """prod over all places of |2|_v^(-t); only v = inf and v = 2 differ from 1."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    out = Fraction(1)
    for v in (INF, PlaceQ(2)):
        out *= abs_norm(2, v) ** -t
    return out


def theta_minus_one(n: int, v: PlaceQ) -> Fraction:
    """(Theta+ - Theta-)(1) = |2|_v^(-n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return abs_norm(2, v) ** -n


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion; 0 when p | a."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _split(x: Fraction, p: int) -> tuple[int, int]:
    """x = p^v * u with u an integer prime to p, up to squares of p-units."""
    x = as_fraction(x)
    v = valuation(x, p)
    n, d = x.numerator, x.denominator
    # u = x / p^v times d^2, an integer unit at p in the same square class
    u = n * d
    while u % p == 0:
        u //= p
    return v, u


def hilbert(a, b, v: PlaceQ) -> int:
    """Quadratic Hilbert symbol (a, b)_v over Q."""
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise DegenerateInput("Hilbert symbol needs nonzero arguments")
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    alpha, u = _split(a, p)
    beta, w = _split(b, p)
    if p == 2:
        def eps(z):
            return ((z - 1) // 2) % 2

        def omega(z):
            return ((z * z - 1) // 8) % 2

        e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * legendre(u, p) ** (beta % 2) * legendre(w, p) ** (alpha % 2)


def sgn_quadext(d: int, x, v: PlaceQ) -> int:
    """Local quadratic character of Q(sqrt d)/Q at v, evaluated on x."""
    if not is_squarefree(d) or d == 1:
        raise ValueError(f"d = {d} must be squarefree and != 0, 1")
    return hilbert(d, x, v)


def delta_zero(gamma_prime_charpoly: PolyQ, a_second: Sequence, nprime: int,
               det_delta_prime_plus_one, field_labels: Sequence, v: PlaceQ) -> int:
    """sgn_{K''/K''#}(P_{a'}(a'') (-a'')^(-n') det(delta' + 1)), factor by factor.

    Each K''_i is either split (label "split", contributes +1) or Q(sqrt d)
    (label d, with a''_i given as a QuadElem of that field); the fixed field
    must be Q.  The composite argument has to land in Q.
    """
    if len(a_second) != len(field_labels):
        raise ValueError("a_second and field_labels must have equal length")
    det = as_fraction(det_delta_prime_plus_one)
    if det == 0:
        raise DegenerateInput("det(delta' + 1) = 0")
    sign = 1
    for a2, label in zip(a_second, field_labels):
        if label == "split":
            continue
        d = int(label)
        if not isinstance(a2, QuadElem) or a2.d != d:
            raise Unsupported("field factors need a'' in Q(sqrt d); higher-degree K''# "
                              "is not supported")
        arg = poly_eval(gamma_prime_charpoly, a2) * (-a2) ** (-nprime) * det
        if arg.is_zero():
            raise DegenerateInput("Delta_0 argument vanishes")
        if not arg.is_rational():
            raise DegenerateInput(f"argument {arg} does not lie in K''# = Q")
        sign *= sgn_quadext(d, arg.a, v)
    return sign


def delta_zero_for_pair(pair, v: PlaceQ) -> int:
    """Delta_0 for an equi-singular pair whose gamma'' field factors are quadratic.

    P_{a'} is the characteristic polynomial of a' on K' (ranks ignored) and
    delta' is the part of delta carried by gamma' together with W_+.
    """
    g1, g2 = pair.gamma
    P = PolyQ([1])
    for f in g1.factors:
        for q in f.polys:
            P = P * q
    dfac = pair.delta.factors
    d1 = SpClassParam(pair.datum.nprime, tuple(dfac[i] for i in pair.iprime),
                      pair.delta.dim_plus, 0)
    det = expand(char_poly(d1))(-1)
    values, labels = [], []
    for f in g2.factors:
        if f.kind == "split":
            values.append(None)
            labels.append("split")
            continue
        if f.poly.degree != 2:
            raise Unsupported("Delta_0 is implemented only when K''# = Q")
        root = quadratic_root(f.poly)
        values.append(root)
        labels.append(root.d)
    return delta_zero(P, values, pair.datum.nprime, det, labels, v)


def sign_ledger(q1, q2, e1: int, e2: int) -> bool:
    """Check (-1)^(q1 - q2) = e1 / e2 for Kottwitz signs e1, e2."""
    diff = as_fraction(q1) - as_fraction(q2)
    if diff.denominator != 1:
        raise ValueError(f"q1 - q2 = {diff} is not an integer")
    if e1 not in (1, -1) or e2 not in (1, -1):
        raise ValueError("Kottwitz signs are +1 or -1")
    return (-1) ** (int(diff) % 2) == e1 * e2
