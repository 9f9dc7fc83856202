"""Exact combinatorics behind the stabilization of elliptic terms for the
metaplectic group Mp(2n): class parameters of Sp(2n) and SO(2k+1), the
endoscopic correspondence, kappa characters, B/C root-system identities,
Tate motives and local signs.  All arithmetic is over Q, exactly.
"""

from .classparam import (
    Atom,
    GroupShape,
    SoClassParam,
    SpClassParam,
    UnitaryFactor,
    char_poly,
    commutant_shape_so,
    commutant_shape_sp,
    validate,
    validate_so,
    validate_sp,
)
from .endoscopy import (
    EndoDatum,
    EquiSingPair,
    KappaCharacter,
    bijection_forward,
    bijection_inverse,
    commutant_pair,
    correspond,
    enumerate_endo_data,
    fiber,
    iota,
    is_equi_singular,
    kappa_of,
    nonramified_pair_check,
    t_value,
    tamagawa,
)
from .errors import MetastabError
from .exactnum import (
    PolyQ,
    QuadElem,
    is_irreducible_q,
    is_self_reciprocal,
    poly_eval,
    poly_neg_arg,
    poly_reciprocal,
)
from .localsym import (
    INF,
    PlaceQ,
    abs_norm,
    delta_zero,
    hilbert,
    legendre,
    sgn_quadext,
    sign_ledger,
    theta_minus_one,
    two_power_product,
)
from .motive import TateMotive, local_L_dual1, motive_equal, motive_of_shape, point_count
from .rootsys import (
    RootDatum,
    coroot_btr,
    dim_and_q,
    discriminant_ratio,
    exponents,
    germ_exponent,
    lemma_2n_ratios,
    positive_roots,
    rho,
    steinberg_rho_value,
    varpi_eval,
    weyl_discriminant,
    weyl_order,
)

__version__ = "0.1.0"
