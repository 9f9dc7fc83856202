"""
Semisimple classes as eigenvalue data
=====================================

A class of Sp(2n) is a list of self-reciprocal factors plus the
multiplicities of +1 and -1.  Its commutant is read off directly.
"""

from metastab.classparam import (
    SoClassParam, SpClassParam, UnitaryFactor, char_poly, commutant_shape_so,
    commutant_shape_sp, validate_sp,
)
from metastab.exactnum import PolyQ, irreducibility_check, poly_neg_arg, poly_reciprocal

X = PolyQ.x()
q = PolyQ([1, -3, 1])  # X^2 - 3X + 1, roots (3 +- sqrt 5)/2
print(q, "reciprocal:", poly_reciprocal(q), "sign flip:", poly_neg_arg(q))
print("irreducible?", irreducibility_check(q))

delta = SpClassParam(2, (UnitaryFactor("field", q, 1),), 2, 0)
print("delta:", delta.to_json())
print("validation:", validate_sp(delta))
print("char poly:", [(str(p), m) for p, m in char_poly(delta)])
print("commutant:", commutant_shape_sp(delta).to_json())

# a split factor pairs X - 2 with X - 1/2 and contributes GL(1)
gamma = SoClassParam(5, (UnitaryFactor.of(X - 2),), 3, 0)
print("SO(5) commutant:", commutant_shape_so(gamma).to_json())

# mistakes are reported all at once
bad = SpClassParam(2, (UnitaryFactor("field", X - 2, 1),), 1, 0)
for e in validate_sp(bad).errors:
    print("  error:", e)

# Phi_24 splits modulo every prime; the bounded test cannot certify it
phi24 = PolyQ([1, 0, 0, 0, -1, 0, 0, 0, 1])
print("Phi_24:", irreducibility_check(phi24))
