"""Semisimple stable classes of Sp(2n) and SO(2k+1) via eigenvalue data.

A class is recorded by its unitary part (a multiset of irreducible factors,
each with a module rank) together with the dimensions of the +1 and -1
eigenspaces.  Hermitian and quadratic forms are forgotten; for Sp this is
exactly stable conjugacy, for SO it is conjugacy under O(V)(F-bar).

A factor is either of *field* kind (self-reciprocal irreducible p, K = Q[x]/p
is a field with involution x -> 1/x) or of *split* kind (p != p*, the pair
{p, p*} gives K = K# x K#).  Split factors are stored under the smaller of p
and p* in :meth:`PolyQ.sort_key` order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import InvalidParameter, InvalidPolynomial, SchemaError
from .exactnum import (
    PolyQ,
    irreducibility_check,
    is_self_reciprocal,
    poly_neg_arg,
    poly_reciprocal,
)
from .rootsys import group_dim

X_MINUS_1 = PolyQ([-1, 1])
X_PLUS_1 = PolyQ([1, 1])


def canonical_split_rep(p: PolyQ) -> PolyQ:
    return min(p, poly_reciprocal(p))


def algebra_label(poly: PolyQ) -> PolyQ:
    """Canonical polynomial for the algebra with involution cut out by `poly`.

    x -> 1/x and x -> -x both give isomorphic algebras with involution, so the
    label is the least of p, p*, p(-X), p*(-X).
    """
    r = poly_reciprocal(poly)
    return min(poly, r, poly_neg_arg(poly), poly_neg_arg(r))


@lru_cache(maxsize=4096)
def _poly_problems(kind: str, p: PolyQ, certified: bool) -> tuple[tuple[str, ...], tuple[str, ...]]:
    errors, warnings = [], []
    tag = f"factor {p}"
    if kind not in ("field", "split"):
        return (f"{tag}: unknown kind {kind!r}",), ()
    if not p.is_monic() or p.degree < 1:
        return (f"{tag}: must be monic of degree >= 1",), ()
    if p[0] == 0:
        return (f"{tag}: constant term vanishes",), ()
    if p(1) == 0 or p(-1) == 0:
        errors.append(f"{tag}: +1 and -1 must not be roots")
    selfrec = is_self_reciprocal(p)
    if kind == "field":
        if not selfrec:
            errors.append(f"{tag}: field kind requires a self-reciprocal polynomial")
        elif p.degree % 2:
            errors.append(f"{tag}: field kind requires even degree")
    else:
        if selfrec:
            errors.append(f"{tag}: split kind requires p != p*")
        elif canonical_split_rep(p) != p:
            errors.append(f"{tag}: split factor must be stored as min(p, p*) = "
                          f"{canonical_split_rep(p)}")
    verdict, method = irreducibility_check(p)
    if verdict is False:
        errors.append(f"{tag}: reducible ({method})")
    elif verdict is None and not certified:
        warnings.append(f"{tag}: irreducibility unknown ({method}); pass certified=True")
    return tuple(errors), tuple(warnings)


@dataclass(frozen=True, order=True)
class UnitaryFactor:
    kind: str
    poly: PolyQ
    rank: int
    certified: bool = field(default=False, compare=False)

    @classmethod
    def of(cls, poly: PolyQ, rank: int = 1, certified: bool = False) -> "UnitaryFactor":
        """Build a factor from any member of its reciprocal pair, inferring the kind."""
        if is_self_reciprocal(poly):
            return cls("field", poly, rank, certified)
        return cls("split", canonical_split_rep(poly), rank, certified)

    @property
    def effective_degree(self) -> int:
        return self.poly.degree if self.kind == "field" else 2 * self.poly.degree

    @property
    def polys(self) -> tuple[PolyQ, ...]:
        """The irreducible factors of the characteristic polynomial it contributes."""
        if self.kind == "field":
            return (self.poly,)
        return (self.poly, poly_reciprocal(self.poly))

    @property
    def key(self):
        return (self.kind, self.poly)

    def with_rank(self, rank: int) -> "UnitaryFactor":
        return UnitaryFactor(self.kind, self.poly, rank, self.certified)

    def sign_flipped(self) -> "UnitaryFactor":
        """The factor with negated roots (kind is preserved since roots avoid +-1)."""
        flipped = UnitaryFactor.of(poly_neg_arg(self.poly), self.rank, self.certified)
        if flipped.kind != self.kind:
            raise AssertionError(f"sign flip changed the kind of {self.poly}")
        return flipped

    def problems(self) -> tuple[list[str], list[str]]:
        errors = []
        if not isinstance(self.rank, int) or self.rank < 1:
            errors.append(f"factor {self.poly}: rank must be a positive integer, got {self.rank!r}")
        perr, pwarn = _poly_problems(self.kind, self.poly, self.certified)
        return errors + list(perr), list(pwarn)

    def to_json(self):
        out = {"kind": self.kind, "poly": self.poly.to_json(), "rank": self.rank}
        if self.certified:
            out["certified"] = True
        return out

    @classmethod
    def from_json(cls, data) -> "UnitaryFactor":
        return cls(data["kind"], PolyQ.from_json(data["poly"]), int(data["rank"]),
                   bool(data.get("certified", False)))


def _sorted_factors(factors: Iterable[UnitaryFactor]) -> tuple[UnitaryFactor, ...]:
    return tuple(sorted(factors, key=lambda f: (f.key, f.rank)))


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_if_invalid(self):
        if self.errors:
            raise InvalidParameter(self.errors)

    def to_json(self):
        return {"ok": self.ok, "errors": list(self.errors), "warnings": list(self.warnings)}


class _ClassParam:
    factors: tuple[UnitaryFactor, ...]
    dim_plus: int
    dim_minus: int

    @property
    def unitary_dim(self) -> int:
        return sum(f.effective_degree * f.rank for f in self.factors)

    @property
    def field_factors(self) -> list[UnitaryFactor]:
        return [f for f in self.factors if f.kind == "field"]

    @property
    def split_factors(self) -> list[UnitaryFactor]:
        return [f for f in self.factors if f.kind == "split"]

    def _factor_problems(self):
        errors, warnings = [], []
        for f in self.factors:
            e, w = f.problems()
            errors += e
            warnings += w
        keys = Counter(f.key for f in self.factors)
        for f in self.factors:
            if keys[f.key] > 1:
                errors.append(f"factor {f.poly} repeated; carry multiplicity in rank")
                keys[f.key] = 0
        return errors, warnings


@dataclass(frozen=True)
class SpClassParam(_ClassParam):
    """Stable class in Sp(2n): unitary factors plus dim W_+ and dim W_-."""

    n: int
    factors: tuple[UnitaryFactor, ...] = ()
    dim_plus: int = 0
    dim_minus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", _sorted_factors(self.factors))

    @property
    def size(self) -> int:
        return 2 * self.n

    def to_json(self):
        return {"group": "Sp", "n": self.n, "factors": [f.to_json() for f in self.factors],
                "dim_plus": self.dim_plus, "dim_minus": self.dim_minus}

    def __str__(self):
        fs = ", ".join(f"{f.kind}[{f.poly}]^{f.rank}" for f in self.factors)
        return f"Sp({2 * self.n}){{{fs}; +{self.dim_plus}, -{self.dim_minus}}}"


@dataclass(frozen=True)
class SoClassParam(_ClassParam):
    """Class in SO(2k+1) up to O(F-bar)-conjugacy: unitary factors, dim V_+, dim V_-."""

    size: int
    factors: tuple[UnitaryFactor, ...] = ()
    dim_plus: int = 1
    dim_minus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", _sorted_factors(self.factors))

    @property
    def k(self) -> int:
        return (self.size - 1) // 2

    def to_json(self):
        return {"group": "SO", "size": self.size, "factors": [f.to_json() for f in self.factors],
                "dim_plus": self.dim_plus, "dim_minus": self.dim_minus}

    def __str__(self):
        fs = ", ".join(f"{f.kind}[{f.poly}]^{f.rank}" for f in self.factors)
        return f"SO({self.size}){{{fs}; +{self.dim_plus}, -{self.dim_minus}}}"


def identity_sp(n: int) -> SpClassParam:
    return SpClassParam(n, (), 2 * n, 0)


def minus_identity_sp(n: int) -> SpClassParam:
    return SpClassParam(n, (), 0, 2 * n)


def identity_so(k: int) -> SoClassParam:
    return SoClassParam(2 * k + 1, (), 2 * k + 1, 0)


def param_from_json(data):
    group = data.get("group")
    factors = tuple(UnitaryFactor.from_json(f) for f in data.get("factors", []))
    if group == "Sp":
        return SpClassParam(int(data["n"]), factors, int(data["dim_plus"]), int(data["dim_minus"]))
    if group == "SO":
        return SoClassParam(int(data["size"]), factors, int(data["dim_plus"]),
                            int(data["dim_minus"]))
    raise SchemaError(f"class parameter needs group 'Sp' or 'SO', got {group!r}")
    raise KeyError(f"'group' must be 'Sp' or 'SO', got {group!r}")


def validate_sp(p: SpClassParam) -> ValidationReport:
    errors, warnings = p._factor_problems()
    if not isinstance(p.n, int) or p.n < 0:
        errors.append(f"n must be a nonnegative integer, got {p.n!r}")
    for name in ("dim_plus", "dim_minus"):
        v = getattr(p, name)
        if v < 0:
            errors.append(f"{name} = {v} is negative")
        elif v % 2:
            errors.append(f"{name} = {v} is odd (parity violation: symplectic spaces are even)")
    total = p.unitary_dim + p.dim_plus + p.dim_minus
    if total != 2 * p.n:
        errors.append(f"dimension count {p.unitary_dim} + {p.dim_plus} + {p.dim_minus} = {total}"
                      f" != 2n = {2 * p.n}")
    return ValidationReport(tuple(errors), tuple(warnings))


def validate_so(p: SoClassParam) -> ValidationReport:
    errors, warnings = p._factor_problems()
    if not isinstance(p.size, int) or p.size < 1 or p.size % 2 == 0:
        errors.append(f"size must be an odd positive integer, got {p.size!r}")
    if p.dim_minus < 0:
        errors.append(f"dim_minus = {p.dim_minus} is negative")
    elif p.dim_minus % 2:
        errors.append(f"dim_minus = {p.dim_minus} is odd (must be even for the class to lie in SO)")
    if p.dim_plus < 1 or p.dim_plus % 2 == 0:
        errors.append(f"dim_plus = {p.dim_plus} must be odd and positive")
    total = p.unitary_dim + p.dim_plus + p.dim_minus
    if total != p.size:
        errors.append(f"dimension count {p.unitary_dim} + {p.dim_plus} + {p.dim_minus} = {total}"
                      f" != size {p.size}")
    return ValidationReport(tuple(errors), tuple(warnings))


def validate(p) -> ValidationReport:
    return validate_sp(p) if isinstance(p, SpClassParam) else validate_so(p)


def require_valid(p):
    validate(p).raise_if_invalid()
    return p


# ---------------------------------------------------------------------------
# characteristic polynomials


FactoredPoly = tuple  # tuple of (PolyQ, multiplicity), sorted


def _normalize_factored(counter: Counter) -> FactoredPoly:
    return tuple(sorted(((p, m) for p, m in counter.items() if m), key=lambda pm: pm[0].sort_key()))


def char_poly(p) -> FactoredPoly:
    """Factored characteristic polynomial as sorted (irreducible, multiplicity) pairs."""
    require_valid(p)
    c = Counter()
    for f in p.factors:
        for q in f.polys:
            c[q] += f.rank
    c[X_MINUS_1] += p.dim_plus
    c[X_PLUS_1] += p.dim_minus
    return _normalize_factored(c)


def expand(factored: FactoredPoly) -> PolyQ:
    out = PolyQ([1])
    for q, m in factored:
        out = out * q**m
    return out


def param_from_char_poly(group: str, size: int, factored: FactoredPoly):
    """Rebuild a class parameter from its factored characteristic polynomial."""
    c = Counter(dict(factored))
    dim_plus = c.pop(X_MINUS_1, 0)
    dim_minus = c.pop(X_PLUS_1, 0)
    factors = []
    while c:
        q = min(c, key=PolyQ.sort_key)
        m = c.pop(q)
        if is_self_reciprocal(q):
            factors.append(UnitaryFactor("field", q, m))
            continue
        r = poly_reciprocal(q)
        if c.pop(r, None) != m:
            raise InvalidPolynomial(f"{q} and its reciprocal {r} have unequal multiplicities")
        factors.append(UnitaryFactor("split", q, m))
    if group == "Sp":
        return SpClassParam(size // 2, tuple(factors), dim_plus, dim_minus)
    return SoClassParam(size, tuple(factors), dim_plus, dim_minus)


# ---------------------------------------------------------------------------
# commutants


@dataclass(frozen=True, order=True)
class Atom:
    """Simple constituent of a commutant.

    kind is Sp / SO_odd (size = matrix size, over Q) or GL / U (size = module
    rank m, over the fixed field K# of degree base_degree, labelled by the
    polynomial of the algebra K).
    """

    kind: str
    size: int
    base: PolyQ | None = None
    base_degree: int = 1

    @property
    def dim(self) -> int:
        """Dimension over Q (after restriction of scalars)."""
        if self.kind == "Sp":
            return group_dim("Sp", self.size // 2)
        if self.kind == "SO_odd":
            return group_dim("SO", (self.size - 1) // 2)
        return self.base_degree * group_dim(self.kind, self.size)

    @property
    def is_trivial(self) -> bool:
        return self.dim == 0 and self.kind in ("Sp", "SO_odd")

    def __str__(self):
        if self.kind == "Sp":
            return f"Sp({self.size})"
        if self.kind == "SO_odd":
            return f"SO({self.size})"
        return f"{self.kind}({self.size}) over K#[{self.base}]"

    def to_json(self):
        out = {"kind": self.kind, "size": self.size}
        if self.base is not None:
            out["base"] = self.base.to_json()
            out["base_degree"] = self.base_degree
        return out

    @classmethod
    def from_json(cls, data) -> "Atom":
        base = data.get("base")
        return cls(data["kind"], int(data["size"]),
                   PolyQ.from_json(base) if base is not None else None,
                   int(data.get("base_degree", 1)))


@dataclass(frozen=True)
class GroupShape:
    """Product of atoms; for SO commutants with a -1 eigenspace, `minus_caveat`
    records dim V_- (the commutant is then disconnected and only its identity
    component's unitary and SO(V_+) parts are listed)."""

    atoms: tuple[Atom, ...] = ()
    minus_caveat: int = 0

    @property
    def dim(self) -> int:
        return sum(a.dim for a in self.atoms)

    def __add__(self, other: "GroupShape") -> "GroupShape":
        return GroupShape(self.atoms + other.atoms, self.minus_caveat + other.minus_caveat)

    def __str__(self):
        s = " x ".join(str(a) for a in self.atoms) or "1"
        return s + (f" [caveat: dim V_- = {self.minus_caveat}]" if self.minus_caveat else "")

    def to_json(self):
        out = {"atoms": [a.to_json() for a in self.atoms]}
        if self.minus_caveat:
            out["minus_caveat"] = self.minus_caveat
        return out

    @classmethod
    def from_json(cls, data) -> "GroupShape":
        if isinstance(data, list):
            data = {"atoms": data}
        return cls(tuple(Atom.from_json(a) for a in data["atoms"]), int(data.get("minus_caveat", 0)))


def unitary_atom(f: UnitaryFactor) -> Atom:
    if f.kind == "field":
        return Atom("U", f.rank, algebra_label(f.poly), f.poly.degree // 2)
    return Atom("GL", f.rank, algebra_label(f.poly), f.poly.degree)


def unitary_atoms(factors: Iterable[UnitaryFactor]) -> tuple[Atom, ...]:
    return tuple(unitary_atom(f) for f in factors)


def commutant_shape_sp(p: SpClassParam) -> GroupShape:
    require_valid(p)
    atoms = list(unitary_atoms(p.factors))
    for d in (p.dim_plus, p.dim_minus):
        if d:
            atoms.append(Atom("Sp", d))
    return GroupShape(tuple(atoms))


def commutant_shape_so(p: SoClassParam) -> GroupShape:
    require_valid(p)
    atoms = list(unitary_atoms(p.factors))
    if p.dim_plus > 1:
        atoms.append(Atom("SO_odd", p.dim_plus))
    return GroupShape(tuple(atoms), minus_caveat=p.dim_minus)
