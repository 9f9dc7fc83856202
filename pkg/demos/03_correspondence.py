"""
From (gamma', gamma'') to delta and back
========================================

An element of SO(2n'+1) x SO(2n''+1) gives a class of Sp(2n): keep the
eigenvalues of gamma', negate those of gamma'', drop one eigenvalue 1
from each.  Over equi-singular classes this is a bijection with kappa.
"""

from collections import Counter

from metastab.classparam import SpClassParam, UnitaryFactor, identity_so, identity_sp
from metastab.endoscopy import (
    EquiSingPair, bijection_forward, bijection_inverse, commutant_pair, correspond,
    enumerate_endo_data, fiber, iota, is_equi_singular, kappa_of, t_value,
)
from metastab.exactnum import PolyQ
from metastab.families import bijection_inputs, sp_params

print("data for n=3:", [d.to_json() for d in enumerate_endo_data(3)])
print("iota:", {str(d.to_json()): str(iota(d)) for d in enumerate_endo_data(3)})

# the smallest example: delta = 1 in Sp(2)
gp = (identity_so(1), identity_so(0))
print("gamma = (1, 1) ->", correspond(gp).to_json(), is_equi_singular(gp))

delta = SpClassParam(2, (UnitaryFactor("field", PolyQ([1, 0, 1]), 1),
                         UnitaryFactor("field", PolyQ([1, -3, 1]), 1)), 0, 0)
for isecond, gl in bijection_inputs(delta):
    datum, gp = bijection_forward(delta, isecond, gl)
    pair = EquiSingPair.from_gamma(gp)
    back = bijection_inverse(datum, gp)
    print(f"I''={list(isecond)}: datum {datum.to_json()}, kappa {kappa_of(pair).to_json()}, "
          f"t={t_value(pair)}, round trip {back.delta == delta}")
    cp = commutant_pair(pair)
    print("   G_delta:", [a.kind for a in cp.g_shape.atoms], " H_gamma:", [b.kind for b in cp.h_shape.atoms])

for d in enumerate_endo_data(2):
    print("fiber over", d.to_json(), "has", len(fiber(delta, d)), "element(s)")

# how the whole family of Sp(8) classes distributes over the data
sizes = Counter()
for delta in sp_params(4):
    for d in enumerate_endo_data(4):
        sizes[d.to_json()[0]] += len(fiber(delta, d))
print("fiber sizes summed over Sp(8) family, by n':", dict(sorted(sizes.items())))
print("identity of Sp(8) at (4, 0):", fiber(identity_sp(4), enumerate_endo_data(4)[0]))
