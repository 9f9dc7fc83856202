"""
B_n and C_n side by side
========================

Sp(2n) and SO(2n+1) share a Weyl group and exponents, but varpi(rho)
differs by exactly 2^-n.  Everything below is exact.
"""

from fractions import Fraction

from metastab.rootsys import (
    RootDatum, discriminant_ratio, exponents, lemma_2n_ratios, positive_roots, rho,
    steinberg_rho_value, varpi_eval, weyl_discriminant, weyl_order,
)

B2, C2 = RootDatum("B", 2), RootDatum("C", 2)
print("positive roots of B2:", [tuple(map(str, r)) for r in positive_roots(B2)])
print("positive roots of C2:", [tuple(map(str, r)) for r in positive_roots(C2)])
print("rho(B2) =", [str(x) for x in rho(B2)], " rho(C2) =", [str(x) for x in rho(C2)])

# the twins agree on everything a measure sees
for n in range(1, 6):
    b, c = RootDatum("B", n), RootDatum("C", n)
    print(f"n={n}: exponents {exponents(c)}  |W| = {weyl_order(c)} = {weyl_order(b)}")

# varpi of G = Sp(2n) at rho of H = SO(2n+1), against varpi at its own rho
for n in range(1, 7):
    r1, r2 = lemma_2n_ratios(n)
    print(f"n={n}: ratio {r1}, squared {r2}")

C3 = RootDatum("C", 3)
print("Steinberg closed form for C3:", steinberg_rho_value(C3), "direct:", varpi_eval(C3, rho(C3)))

# the discriminant ratio at a torus point, and its limit at the identity
t = [Fraction(3), Fraction(-1, 2)]
print("D_C / D_B at", [str(x) for x in t], "=", weyl_discriminant(C2, t) / weyl_discriminant(B2, t),
      "closed form:", discriminant_ratio(2, t))
print("limit at t = 1:", discriminant_ratio(2, [1, 1]))
