"""Artin-Tate motives of commutants as multisets of Tate twists.

Sp(2m) and SO(2m+1) both have motive Q(-1) + Q(-3) + ... + Q(1-2m).  Unitary
and GL constituents get an opaque summand keyed by (kind, rank, algebra):
inner forms share it, which is the only property the stabilization needs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .classparam import Atom, GroupShape
from .errors import Unsupported
from .exactnum import is_prime
from .rootsys import group_dim


@dataclass(frozen=True, order=True)
class Summand:
    """Either an explicit twist Q(-exponent) with an Artin mark, or an opaque label."""

    exponent: int = 0
    artin_mark: str = "trivial"
    label: tuple = ()

    @property
    def explicit(self) -> bool:
        return not self.label

    def to_json(self):
        if self.label:
            return {"label": list(self.label)}
        out = {"exponent": self.exponent}
        if self.artin_mark != "trivial":
            out["artin_mark"] = self.artin_mark
        return out

    @classmethod
    def from_json(cls, data) -> "Summand":
        if isinstance(data, int):
            return cls(data)
        if "label" in data:
            return cls(label=tuple(_freeze(data["label"])))
        return cls(int(data["exponent"]), data.get("artin_mark", "trivial"))


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(v) for v in x)
    return x


@dataclass(frozen=True)
class TateMotive:
    summands: tuple[Summand, ...] = ()

    def __post_init__(self):
        for s in self.summands:
            if s.explicit and s.exponent < 1:
                raise ValueError(f"twist exponents must be positive, got {s.exponent}")
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of_exponents(cls, exps) -> "TateMotive":
        return cls(tuple(Summand(e) for e in exps))

    def __add__(self, other: "TateMotive") -> "TateMotive":
        return TateMotive(self.summands + other.summands)

    @property
    def exponents(self) -> list[int]:
        return [s.exponent for s in self.summands if s.explicit]

    def to_json(self):
        return [s.to_json() for s in self.summands]

    @classmethod
    def from_json(cls, data) -> "TateMotive":
        return cls(tuple(Summand.from_json(s) for s in data))


def _atom_motive(a: Atom) -> TateMotive:
    if a.kind == "Sp":
        m = a.size // 2
    elif a.kind == "SO_odd":
        m = (a.size - 1) // 2
    elif a.kind in ("U", "GL"):
        base = tuple(a.base.to_json()) if a.base is not None else ()
        return TateMotive((Summand(label=(a.kind, a.size, base)),))
    else:
        raise Unsupported(f"atom kind {a.kind!r}")
    return TateMotive.of_exponents(range(1, 2 * m, 2))


def motive_of_shape(shape: GroupShape) -> TateMotive:
    out = TateMotive()
    for a in shape.atoms:
        out = out + _atom_motive(a)
    return out


def motive_equal(a: TateMotive, b: TateMotive) -> bool:
    return Counter(a.summands) == Counter(b.summands)


def prime_power_base(q: int) -> int | None:
    """The prime p with q = p^k, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return p if q == 1 and is_prime(p) else None


def local_L_dual1(m: TateMotive, q: int) -> Fraction:
    """L(M^v(1)) at a place with residue field of size q: prod (1 - q^-(e+1))^-1."""
    if prime_power_base(q) is None:
        raise ValueError(f"{q} is not a prime power")
    out = Fraction(1)
    for s in m.summands:
        if not s.explicit or s.artin_mark != "trivial":
            raise Unsupported("local L-factor needs explicit twists with trivial Artin mark")
        out /= 1 - Fraction(1, q ** (s.exponent + 1))
    return out


def point_count(kind: str, n: int, q: int) -> int:
    """|Sp(2n, F_q)| = |SO(2n+1, F_q)| = q^(n^2) prod_{i<=n} (q^(2i) - 1), q odd."""
    if kind not in ("Sp", "SO"):
        raise Unsupported(f"point count for {kind!r}")
    p = prime_power_base(q)
    if p is None:
        raise ValueError(f"{q} is not a prime power")
    if p == 2:
        raise Unsupported("even q is not supported")
    out = q ** (n * n)
    for i in range(1, n + 1):
        out *= q ** (2 * i) - 1
    return out


def normalized_volume(kind: str, n: int, q: int) -> Fraction:
    """q^(-dim) |G(F_q)|, the volume of G(O) under the unramified measure."""
    return Fraction(point_count(kind, n, q), q ** group_dim(kind, n))
