"""
Motives and point counts
========================

Sp(2n) and SO(2n+1) have the same Tate motive Q(-1) + Q(-3) + ... , so
the same local L-value and the same number of F_q points.
"""

from metastab.classparam import Atom, GroupShape
from metastab.motive import local_L_dual1, motive_equal, motive_of_shape, point_count
from metastab.oracles import count_sl2, count_so3

for n in range(1, 5):
    sp = motive_of_shape(GroupShape((Atom("Sp", 2 * n),)))
    so = motive_of_shape(GroupShape((Atom("SO_odd", 2 * n + 1),)))
    print(f"n={n}: exponents {sp.exponents}, equal: {motive_equal(sp, so)}")

for q in (3, 5, 7, 9):
    m = motive_of_shape(GroupShape((Atom("Sp", 4),)))
    print(f"q={q}: |Sp(4)| = {point_count('Sp', 2, q)}, |SO(5)| = {point_count('SO', 2, q)},"
          f" 1/L = {1 / local_L_dual1(m, q)}")

# by brute force over F_3
print("|SL(2, F_3)| by enumeration:", count_sl2(3), " |SO(3, F_3)|:", count_so3(3))
