"""Exact rationals, dense polynomials over Q, and quadratic-field elements.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever touches a float.  Polynomials are stored constant-term first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import isqrt, lcm
from typing import Iterable, Union

from .errors import InvalidPolynomial

Rational = Fraction
Number = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce int / Fraction / "p/q" string to Fraction (floats refused)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def encode_rational(x: Number) -> str:
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def decode_rational(s) -> Fraction:
    if isinstance(s, float):
        raise TypeError("floats are not accepted; encode rationals as 'num/den'")
    return as_fraction(s)


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel of a nonzero integer (trial division)."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1
    return sign * out * n


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(n) == n


def is_rational_square(x: Fraction) -> bool:
    x = as_fraction(x)
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


# ---------------------------------------------------------------------------
# polynomials


@total_ordering
class PolyQ:
    """Immutable univariate polynomial with rational coefficients.

    ``PolyQ([1, -3, 1])`` is X^2 - 3X + 1.  Trailing zeros are stripped, so
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def x(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> "PolyQ":
        out = cls([1])
        for r in roots:
            out = out * cls([-as_fraction(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "PolyQ":
        if self.is_zero():
            raise InvalidPolynomial("zero polynomial has no monic normalization")
        return PolyQ(c / self.lc for c in self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyQ([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("PolyQ", self.coeffs)))
        return self._hash

    def sort_key(self):
        """Degree first, then coefficients from the constant term up."""
        return (self.degree, self.coeffs)

    def __lt__(self, other):
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def _coerce(self, other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        return PolyQ([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyQ(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out, base = PolyQ([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / other.lc
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return poly_eval(self, x)

    def __repr__(self):
        return f"PolyQ({[encode_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = encode_rational(mag)
            else:
                mono = "X" if i == 1 else f"X^{i}"
                body = mono if mag == 1 else f"{encode_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self):
        return [encode_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "PolyQ":
        if not isinstance(data, list):
            raise TypeError("polynomial must be a JSON array of coefficient strings")
        return cls(decode_rational(c) for c in data)


def _check_unit_monic(p: PolyQ):
    if not isinstance(p, PolyQ) or not p.is_monic():
        raise InvalidPolynomial(f"expected a monic polynomial, got {p}")
    if p[0] == 0:
        raise InvalidPolynomial(f"constant term of {p} vanishes")


def poly_reciprocal(p: PolyQ) -> PolyQ:
    """Monic polynomial whose roots are the inverses of the roots of `p`."""
    _check_unit_monic(p)
    return _reciprocal(p)


@lru_cache(maxsize=8192)
def _reciprocal(p: PolyQ) -> PolyQ:
    return PolyQ(reversed(p.coeffs)).monic()


def is_self_reciprocal(p: PolyQ) -> bool:
    return poly_reciprocal(p) == p


def poly_neg_arg(p: PolyQ) -> PolyQ:
    """(-1)^deg p * p(-X): the monic polynomial with negated roots."""
    if not isinstance(p, PolyQ) or not p.is_monic():
        raise InvalidPolynomial(f"expected a monic polynomial, got {p}")
    return _neg_arg(p)


@lru_cache(maxsize=8192)
def _neg_arg(p: PolyQ) -> PolyQ:
    d = p.degree
    return PolyQ(c if (d - i) % 2 == 0 else -c for i, c in enumerate(p.coeffs))


def poly_eval(p: PolyQ, x):
    """Horner evaluation at a rational or a :class:`QuadElem`."""
    if isinstance(x, QuadElem):
        acc = QuadElem(x.d, 0, 0)
    else:
        x = as_fraction(x)
        acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def integer_scaled(p: PolyQ) -> list[int]:
    """Primitive integer polynomial with the same roots as monic `p`.

    Uses X -> Y/L with L the lcm of the denominators, which keeps the result
    monic: L^n p(Y/L).
    """
    L = 1
    for c in p.coeffs:
        L = lcm(L, c.denominator)
    n = p.degree
    out = [int(c * L ** (n - i)) for i, c in enumerate(p.coeffs)]
    return out


# ---------------------------------------------------------------------------
# polynomials over F_p (lists of ints, constant term first)


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_reduce(coeffs: Iterable[int], p: int) -> list[int]:
    return _gf_trim([c % p for c in coeffs])


def gf_sub(a, b, p):
    n = max(len(a), len(b))
    return _gf_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
    return _gf_trim(q), _gf_trim(a[:db])


def gf_gcd(a, b, p):
    a, b = _gf_trim(list(a)), _gf_trim(list(b))
    while b:
        a, b = b, gf_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def gf_powmod(base, e, mod, p):
    out = [1]
    base = gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = gf_divmod(gf_mul(out, base, p), mod, p)[1]
        base = gf_divmod(gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def gf_derivative(a, p):
    return _gf_trim([(i * c) % p for i, c in enumerate(a)][1:])


def gf_is_squarefree(a, p) -> bool:
    return len(gf_gcd(a, gf_derivative(a, p), p)) == 1


def is_squarefree_mod(p: PolyQ, q: int) -> bool:
    """True iff monic q-integral `p` stays squarefree of full degree mod q."""
    if any(c.denominator % q == 0 for c in p.coeffs):
        raise ValueError(f"{p} is not {q}-integral")
    red = gf_reduce((c.numerator * pow(c.denominator, -1, q) for c in p.coeffs), q)
    return len(red) == len(p.coeffs) and gf_is_squarefree(red, q)


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % r for r in range(2, isqrt(n) + 1))


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def gf_is_irreducible(a, p) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    n = len(a) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for q in _prime_factors(n):
        h = gf_powmod(x, p ** (n // q), a, p)
        if len(gf_gcd(a, gf_sub(h, x, p), p)) != 1:
            return False
    return not gf_sub(gf_powmod(x, p**n, a, p), x, p)


def _small_primes(limit):
    return [q for q in range(2, limit) if is_prime(q)]


# ---------------------------------------------------------------------------
# irreducibility over Q


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def irreducibility_check(p: PolyQ) -> tuple[bool | None, str]:
    """Best-effort irreducibility over Q with the name of the deciding check.

    Returns ``(True | False | None, method)``; ``None`` means no check was
    conclusive.  Exact up to degree 5 (a reducible quintic has a factor of
    degree <= 2, and every such factor is searched for); beyond that a
    certificate comes from an irreducible reduction mod a small good prime.
    """
    if not isinstance(p, PolyQ) or not p.is_monic() or p.degree < 1:
        raise InvalidPolynomial(f"expected monic polynomial of degree >= 1, got {p}")
    n = p.degree
    if n == 1:
        return True, "linear"
    h = integer_scaled(p)
    if n >= 4:
        for q in _small_primes(60):
            red = gf_reduce(h, q)
            if len(red) != n + 1 or not gf_is_squarefree(red, q):
                continue
            if gf_is_irreducible(red, q):
                return True, f"irreducible mod {q}"
    c0 = h[0]
    if c0 == 0:
        return False, "rational root 0"
    for d in _divisors(c0):
        for r in (d, -d):
            if sum(c * r**i for i, c in enumerate(h)) == 0:
                return False, f"rational root {r}"
    if n <= 3:
        return True, "no rational root"
    # monic integer quadratic factors X^2 + bX + c: c | h(0), |b| <= 2R, |c| <= R^2
    R = 1 + max(abs(c) for c in h[:-1])
    hp = PolyQ(h)
    for c in _divisors(c0):
        if c > R * R:
            continue
        for cc in (c, -c):
            for b in range(-2 * R, 2 * R + 1):
                if divmod(hp, PolyQ([cc, b, 1]))[1].is_zero():
                    return False, f"quadratic factor X^2 + {b}X + {cc}"
    if n <= 5:
        return True, "no factor of degree <= 2"
    return None, "inconclusive"


def is_irreducible_q(p: PolyQ) -> bool | None:
    return irreducibility_check(p)[0]


# ---------------------------------------------------------------------------
# quadratic fields


@dataclass(frozen=True)
class QuadElem:
    """a + b*sqrt(d) in Q(sqrt d), d squarefree and not 0 or 1."""

    d: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d in (0, 1) or not is_squarefree(self.d):
            raise ValueError(f"d={self.d!r} must be a squarefree integer other than 0, 1")
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))

    def _lift(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        return QuadElem(self.d, as_fraction(other), 0)

    def __add__(self, other):
        o = self._lift(other)
        return QuadElem(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.d, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QuadElem(self.d, self.a * o.a + self.d * self.b * o.b,
                        self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.d, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = self.conjugate()
        return QuadElem(self.d, c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = QuadElem(self.d, 1, 0)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        return f"{encode_rational(self.a)} + {encode_rational(self.b)}*sqrt({self.d})"

    def to_json(self):
        return {"d": self.d, "a": encode_rational(self.a), "b": encode_rational(self.b)}

    @classmethod
    def from_json(cls, data) -> "QuadElem":
        return cls(int(data["d"]), decode_rational(data["a"]), decode_rational(data["b"]))


def quadratic_root(p: PolyQ) -> QuadElem:
    """One root of an irreducible monic quadratic, as an element of Q(sqrt d)."""
    if p.degree != 2 or not p.is_monic():
        raise InvalidPolynomial(f"{p} is not a monic quadratic")
    s, t = -p[1], p[0]  # X^2 - sX + t
    disc = s * s - 4 * t
    if is_rational_square(disc):
        raise InvalidPolynomial(f"{p} splits over Q")
    # disc = (num/den) = num*den/den^2; write num*den = m^2 * d
    nd = disc.numerator * disc.denominator
    d = squarefree_part(nd)
    m = isqrt(nd // d)
    return QuadElem(d, s / 2, Fraction(m, 2 * disc.denominator))
