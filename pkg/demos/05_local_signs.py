"""
Hilbert symbols and the sign Delta_0
====================================

Local signs at every place of Q, their product formula, and the sign
attached to one equi-singular pair.
"""

from metastab.classparam import SoClassParam, UnitaryFactor
from metastab.endoscopy import EquiSingPair
from metastab.exactnum import PolyQ
from metastab.localsym import (
    INF, PlaceQ, delta_zero_for_pair, hilbert, relevant_places, theta_minus_one,
    two_power_product,
)

places = [INF] + [PlaceQ(p) for p in (2, 3, 5, 7)]
for a, b in [(-1, -1), (2, 5), (3, 7), (-3, 15)]:
    signs = {str(v): hilbert(a, b, v) for v in relevant_places(a, b)}
    print(f"({a}, {b}):", signs)

print("Theta(1) for n=2:", {str(v): str(theta_minus_one(2, v)) for v in places})
print("prod over places |2|^-5 =", two_power_product(5))

# gamma' with eigenvalues (3 +- sqrt 5)/2, gamma'' with +-i
g1 = SoClassParam(3, (UnitaryFactor.of(PolyQ([1, -3, 1])),), 1, 0)
g2 = SoClassParam(3, (UnitaryFactor.of(PolyQ([1, 0, 1])),), 1, 0)
pair = EquiSingPair.from_gamma((g1, g2))
print("Delta_0:", {str(v): delta_zero_for_pair(pair, v) for v in places})
