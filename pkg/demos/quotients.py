"""
Quotient structures
===================

"""

from unimodular import Coefficients
from unimodular.quotients import (
    compute_C,
    check_C_divisibility,
    d_chain,
    p_part_permutation_check,
    quotient_S_mod_Si,
    quotient_S_mod_Ui,
    quotient_W_mod_S,
)

c = Coefficients((12, 4, 2, 3))
print("W/S   =", quotient_W_mod_S(c, 1))
print("S/S_1 =", quotient_S_mod_Si(c, 1))
q = quotient_S_mod_Ui(c, 1)
print("S/U_1 =", q, "elementary divisors", q.elementary_divisors)

C = compute_C(c)
print("d-chain", d_chain(c))
print(C)
print("gcd divisibility holds:", check_C_divisibility(C))

# d-chains depend on the order of a_2..a_n, their p-parts do not
for a in [(12, 15, 10, 20), (12, 20, 10, 15), (12, 20, 15, 10)]:
    print(a, d_chain(a))
print(all(p_part_permutation_check((12, 15, 10, 20), (4, 3, 2), p) for p in (2, 3)))
