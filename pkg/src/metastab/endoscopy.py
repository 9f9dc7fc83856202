"""Elliptic endoscopic data of the metaplectic group and the class correspondence.

An elliptic datum is an ordered pair (n', n'') with n' + n'' = n, with
endoscopic group H = SO(2n'+1) x SO(2n''+1).  A pair (gamma', gamma'') in H
corresponds to delta in Sp(2n) when delta's eigenvalues are those of gamma'
with one copy of 1 removed, together with the negatives of those of gamma''
with one copy of 1 removed.  On parameters this reads

    unitary(delta) = unitary(gamma') + (-1) * unitary(gamma'')   (ranks add)
    dim W_+ + 1 = dim V'_+ + dim V''_-
    dim W_- + 1 = dim V'_- + dim V''_+

Forms are never represented: every hermitian-form choice in the bijection
between (delta, kappa) and (n', n'', gamma) exists (the Witt-group argument is
not reproduced), so the bijection is implemented on stable parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .classparam import (
    Atom,
    GroupShape,
    SoClassParam,
    SpClassParam,
    UnitaryFactor,
    require_valid,
    unitary_atom,
    validate_so,
)
from .errors import InvalidParameter, NoCorrespondence, NotEquiSingular, Unsupported
from .exactnum import is_prime, is_squarefree_mod

GammaPair = tuple  # (SoClassParam, SoClassParam)


@dataclass(frozen=True, order=True)
class EndoDatum:
    nprime: int
    nsecond: int

    def __post_init__(self):
        if self.nprime < 0 or self.nsecond < 0:
            raise ValueError("endoscopic datum entries must be nonnegative")

    @property
    def n(self) -> int:
        return self.nprime + self.nsecond

    def to_json(self):
        return [self.nprime, self.nsecond]

    @classmethod
    def from_json(cls, data) -> "EndoDatum":
        a, b = data
        return cls(int(a), int(b))


def enumerate_endo_data(n: int) -> list[EndoDatum]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [EndoDatum(a, n - a) for a in range(n, -1, -1)]


def endoscopic_group_shape(datum: EndoDatum) -> GroupShape:
    """SO(2n'+1) x SO(2n''+1), trivial factors included."""
    return GroupShape((Atom("SO_odd", 2 * datum.nprime + 1), Atom("SO_odd", 2 * datum.nsecond + 1)))


def datum_of(gamma_pair: GammaPair) -> EndoDatum:
    g1, g2 = gamma_pair
    return EndoDatum(g1.k, g2.k)


# ---------------------------------------------------------------------------
# correspondence


class _Merged(NamedTuple):
    delta: SpClassParam
    collisions: tuple[UnitaryFactor, ...]


def _merge(gamma_pair: GammaPair) -> _Merged:
    g1, g2 = gamma_pair
    for g in (g1, g2):
        if not isinstance(g, SoClassParam):
            raise InvalidParameter([f"expected an SO parameter, got {type(g).__name__}"])
        validate_so(g).raise_if_invalid()
    ranks: Counter = Counter()
    rep: dict = {}
    for f in g1.factors:
        ranks[f.key] += f.rank
        rep[f.key] = f
    first_side = set(ranks)
    collisions = []
    for f in g2.factors:
        h = f.sign_flipped()
        if h.key in first_side:
            collisions.append(h.with_rank(ranks[h.key] + h.rank))
        ranks[h.key] += h.rank
        rep.setdefault(h.key, h)
    factors = tuple(rep[k].with_rank(r) for k, r in ranks.items())
    w_plus = g1.dim_plus + g2.dim_minus - 1
    w_minus = g1.dim_minus + g2.dim_plus - 1
    if w_plus < 0 or w_minus < 0 or w_plus % 2 or w_minus % 2:
        raise NoCorrespondence(f"eigenspace dimensions ({w_plus}, {w_minus}) are not "
                               "nonnegative and even")
    delta = SpClassParam(g1.k + g2.k, factors, w_plus, w_minus)
    return _Merged(delta, tuple(collisions))


def correspond(gamma_pair: GammaPair) -> SpClassParam:
    """The stable class of Sp(2n) matched with (gamma', gamma''), fusion merged."""
    return _merge(gamma_pair).delta


class EquiSingVerdict(NamedTuple):
    equi_singular: bool
    witness: str | None

    def __bool__(self):
        return self.equi_singular


def is_equi_singular(gamma_pair: GammaPair) -> EquiSingVerdict:
    merged = _merge(gamma_pair)
    if merged.collisions:
        return EquiSingVerdict(False, f"fusion at {merged.collisions[0].poly}")
    g1, g2 = gamma_pair
    if g1.dim_minus:
        return EquiSingVerdict(False, f"gamma' has eigenvalue -1 (dim V'_- = {g1.dim_minus})")
    if g2.dim_minus:
        return EquiSingVerdict(False, f"gamma'' has eigenvalue -1 (dim V''_- = {g2.dim_minus})")
    return EquiSingVerdict(True, None)


def _rank_splits(factors):
    """Every way of sharing each factor's rank between the two sides."""
    splits = [[]]
    for f in factors:
        splits = [s + [(f, m)] for s in splits for m in range(f.rank + 1)]
    return splits


def fiber(delta: SpClassParam, datum: EndoDatum) -> list[GammaPair]:
    """All (gamma', gamma'') for `datum` whose correspondent is `delta`, canonically sorted."""
    require_valid(delta)
    if datum.n != delta.n:
        return []
    found = set()
    for split in _rank_splits(delta.factors):
        f1 = tuple(f.with_rank(m) for f, m in split if m)
        f2 = tuple(f.sign_flipped().with_rank(f.rank - m) for f, m in split if f.rank - m)
        r1 = 2 * datum.nprime + 1 - sum(f.effective_degree * f.rank for f in f1)
        r2 = 2 * datum.nsecond + 1 - sum(f.effective_degree * f.rank for f in f2)
        if r1 < 1 or r2 < 1:
            continue
        for v1_minus in range(0, r1, 2):
            v1_plus = r1 - v1_minus
            v2_minus = delta.dim_plus + 1 - v1_plus
            if v2_minus < 0 or v2_minus % 2 or v2_minus > r2 - 1:
                continue
            v2_plus = r2 - v2_minus
            if v1_minus + v2_plus != delta.dim_minus + 1:
                continue
            g1 = SoClassParam(2 * datum.nprime + 1, f1, v1_plus, v1_minus)
            g2 = SoClassParam(2 * datum.nsecond + 1, f2, v2_plus, v2_minus)
            found.add((g1, g2))
    return sorted(found, key=gamma_pair_key)


def param_key(p) -> tuple:
    return (p.size, tuple((f.key, f.rank) for f in p.factors), p.dim_plus, p.dim_minus)


def gamma_pair_key(gp: GammaPair) -> tuple:
    return (param_key(gp[0]), param_key(gp[1]))


# ---------------------------------------------------------------------------
# equi-singular pairs


@dataclass(frozen=True)
class EquiSingPair:
    """An equi-singular (gamma', gamma'') <-> delta with delta's factors split
    into those coming from gamma' (iprime) and from gamma'' (isecond); indices
    refer to ``delta.factors``."""

    datum: EndoDatum
    gamma: GammaPair
    delta: SpClassParam
    iprime: tuple[int, ...]
    isecond: tuple[int, ...]

    @classmethod
    def from_gamma(cls, gamma_pair: GammaPair) -> "EquiSingPair":
        verdict = is_equi_singular(gamma_pair)
        if not verdict:
            raise NotEquiSingular(verdict.witness)
        delta = correspond(gamma_pair)
        second_keys = {f.sign_flipped().key for f in gamma_pair[1].factors}
        iprime = tuple(i for i, f in enumerate(delta.factors) if f.key not in second_keys)
        isecond = tuple(i for i, f in enumerate(delta.factors) if f.key in second_keys)
        return cls(datum_of(gamma_pair), tuple(gamma_pair), delta, iprime, isecond)

    def to_json(self):
        return {"datum": self.datum.to_json(),
                "gamma": [g.to_json() for g in self.gamma],
                "delta": self.delta.to_json(),
                "split": {"iprime": list(self.iprime), "isecond": list(self.isecond)}}

    @classmethod
    def from_json(cls, data) -> "EquiSingPair":
        from .classparam import param_from_json

        gamma = tuple(param_from_json(g) for g in data["gamma"])
        pair = cls.from_gamma(gamma)
        if "datum" in data and EndoDatum.from_json(data["datum"]) != pair.datum:
            raise InvalidParameter(["datum does not match the sizes of gamma"])
        if "delta" in data and param_from_json(data["delta"]) != pair.delta:
            raise InvalidParameter(["delta does not correspond to gamma"])
        split = data.get("split")
        if split is not None and (tuple(split["iprime"]), tuple(split["isecond"])) != (
                pair.iprime, pair.isecond):
            raise InvalidParameter(["split does not match the provenance of delta's factors"])
        return pair


@dataclass(frozen=True)
class CommutantPair:
    g_shape: GroupShape
    h_shape: GroupShape
    inner_forms: tuple[tuple[Atom, Atom], ...]
    nonstandard: tuple[tuple[Atom, Atom], ...]

    def to_json(self):
        return {"G": self.g_shape.to_json(), "H": self.h_shape.to_json(),
                "inner_forms": [[a.to_json(), b.to_json()] for a, b in self.inner_forms],
                "nonstandard": [[a.to_json(), b.to_json()] for a, b in self.nonstandard]}


def commutant_pair(pair: EquiSingPair) -> CommutantPair:
    """G_delta and H_gamma with their matching: unitary parts are inner forms of
    each other, Sp(W_+) <-> SO(V'_+) and Sp(W_-) <-> SO(V''_+) are B/C pairs."""
    d = pair.delta
    g1, g2 = pair.gamma
    inner = []
    for idx in pair.iprime + pair.isecond:
        f = d.factors[idx]
        g_atom = unitary_atom(f)
        side = g1 if idx in pair.iprime else g2
        src = f if side is g1 else f.sign_flipped()
        h_fac = next(h for h in side.factors if h.key == src.key)
        inner.append((g_atom, unitary_atom(h_fac)))
    nonstandard = ((Atom("Sp", d.dim_plus), Atom("SO_odd", g1.dim_plus)),
                   (Atom("Sp", d.dim_minus), Atom("SO_odd", g2.dim_plus)))
    g_atoms = [a for a, _ in inner] + [a for a, _ in nonstandard if not a.is_trivial]
    h_atoms = [b for _, b in inner] + [b for _, b in nonstandard if not b.is_trivial]
    return CommutantPair(GroupShape(tuple(g_atoms)), GroupShape(tuple(h_atoms)),
                         tuple(inner), nonstandard)


def t_value(pair: EquiSingPair) -> int:
    """Half the total multiplicity of the eigenvalues +-1 of delta."""
    g1, g2 = pair.gamma
    from_h = g1.dim_plus + g2.dim_plus - 2
    from_g = pair.delta.dim_plus + pair.delta.dim_minus
    if from_h != from_g or from_g % 2:
        raise AssertionError(f"t mismatch: {from_h}/2 vs {from_g}/2")
    return from_g // 2


@dataclass(frozen=True)
class KappaCharacter:
    """Character of {+-1}^s' x {+-1}^s'': trivial on the first block, product on the second."""

    sprime: int
    ssecond: int

    def __call__(self, x: Iterable[int], y: Iterable[int]) -> int:
        x, y = tuple(x), tuple(y)
        if len(x) != self.sprime or len(y) != self.ssecond:
            raise ValueError("argument lengths must be (s', s'')")
        if any(v not in (1, -1) for v in x + y):
            raise ValueError("entries must be +1 or -1")
        out = 1
        for v in y:
            out *= v
        return out

    @property
    def is_trivial(self) -> bool:
        return self.ssecond == 0

    def to_json(self):
        return {"sprime": self.sprime, "ssecond": self.ssecond, "trivial": self.is_trivial}


def kappa_of(pair: EquiSingPair) -> KappaCharacter:
    fac = pair.delta.factors
    s1 = sum(1 for i in pair.iprime if fac[i].kind == "field")
    s2 = sum(1 for i in pair.isecond if fac[i].kind == "field")
    return KappaCharacter(s1, s2)


# ---------------------------------------------------------------------------
# the bijection (delta, kappa) <-> (n', n'', gamma)


def is_elliptic(delta: SpClassParam) -> bool:
    return all(f.kind == "field" for f in delta.factors)


def bijection_forward(delta: SpClassParam, isecond: Iterable[int],
                      gl_second: Iterable[int] | None = None, *,
                      elliptic: bool = True) -> tuple[EndoDatum, GammaPair]:
    """(delta, I'') -> (n', n'', gamma).

    `isecond` lists indices of field-kind factors of ``delta.factors`` going to
    the second block (where kappa is nontrivial).  Split-kind factors are only
    allowed with ``elliptic=False`` and then need an explicit side through
    `gl_second` (indices sent to gamma''; the others go to gamma').
    """
    require_valid(delta)
    isecond = set(isecond)
    fac = delta.factors
    split_idx = {i for i, f in enumerate(fac) if f.kind == "split"}
    if elliptic and split_idx:
        raise Unsupported("delta has split (GL) factors and is not elliptic; "
                          "pass elliptic=False with gl_second")
    if split_idx and gl_second is None:
        raise InvalidParameter(["split factors need an explicit side assignment (gl_second)"])
    gl_second = set(gl_second or ())
    bad = [i for i in isecond if i not in range(len(fac)) or fac[i].kind != "field"]
    bad += [i for i in gl_second if i not in split_idx]
    if bad:
        raise InvalidParameter([f"index {i} is not a factor of the expected kind" for i in bad])
    second = isecond | gl_second
    f1 = tuple(f for i, f in enumerate(fac) if i not in second)
    f2 = tuple(fac[i].sign_flipped() for i in sorted(second))
    u1 = sum(f.effective_degree * f.rank for f in f1)
    u2 = sum(f.effective_degree * f.rank for f in f2)
    if (u1 + delta.dim_plus) % 2 or (u2 + delta.dim_minus) % 2:
        raise NoCorrespondence("odd dimension; no (n', n'') exists")
    datum = EndoDatum((u1 + delta.dim_plus) // 2, (u2 + delta.dim_minus) // 2)
    g1 = SoClassParam(2 * datum.nprime + 1, f1, delta.dim_plus + 1, 0)
    g2 = SoClassParam(2 * datum.nsecond + 1, f2, delta.dim_minus + 1, 0)
    return datum, (g1, g2)


class BijectionPreimage(NamedTuple):
    delta: SpClassParam
    isecond: tuple[int, ...]
    gl_second: tuple[int, ...]


def bijection_inverse(datum: EndoDatum, gamma_pair: GammaPair) -> BijectionPreimage:
    if datum_of(gamma_pair) != datum:
        raise InvalidParameter([f"gamma has sizes for {datum_of(gamma_pair)}, not {datum}"])
    pair = EquiSingPair.from_gamma(gamma_pair)
    fac = pair.delta.factors
    isecond = tuple(i for i in pair.isecond if fac[i].kind == "field")
    gl_second = tuple(i for i in pair.isecond if fac[i].kind == "split")
    return BijectionPreimage(pair.delta, isecond, gl_second)


# ---------------------------------------------------------------------------
# coefficients


def iota(datum: EndoDatum) -> Fraction:
    """tau(G)/tau(H) = 1/tau(H): 1/4 if both n', n'' >= 1, 1/2 otherwise, 1 for n = 0."""
    if datum.n == 0:
        return Fraction(1)
    if datum.nprime >= 1 and datum.nsecond >= 1:
        return Fraction(1, 4)
    return Fraction(1, 2)


def tamagawa(shape: GroupShape) -> Fraction:
    """Tamagawa number of a product of Sp and SO(2k+1) factors."""
    out = Fraction(1)
    for a in shape.atoms:
        if a.kind == "Sp":
            continue
        if a.kind == "SO_odd":
            if a.size > 1:
                out *= 2
            continue
        raise Unsupported(f"Tamagawa number of {a} is not provided")
    return out


def nonramified_pair_check(pair: EquiSingPair, p: int) -> bool:
    """Sufficient good-reduction test at an odd prime p.

    Every defining polynomial must be p-integral with unit constant and
    leading coefficients, and every field-kind factor must stay squarefree
    mod p (equivalently p does not divide its discriminant).
    """
    if p == 2:
        raise Unsupported("residual characteristic 2 is excluded")
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    params = (pair.delta,) + tuple(pair.gamma)
    for param in params:
        for f in param.factors:
            for q in f.polys:
                if any(c.denominator % p == 0 for c in q.coeffs):
                    return False
                if q[0].numerator % p == 0 or q.lc.numerator % p == 0:
                    return False
            if f.kind == "field" and not is_squarefree_mod(f.poly, p):
                return False
    return True
