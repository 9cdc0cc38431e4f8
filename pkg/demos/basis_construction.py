"""
Building and certifying a basis of the solution module
======================================================

"""

from unimodular import Coefficients, build_basis, verify_basis
from unimodular.oracle import ModuleSpan, oracle_basis

c = Coefficients((12, 4, 2, 3))

# M = all indices: X is upper triangular with diagonal 12/4, 4/2, 2/1
bm = build_basis(c, M=(1, 2, 3, 4))
print("A =")
print(bm.A)
for k, z in enumerate(bm.basis, 2):
    print(f"z_{k} = {z}")

# membership plus |det| = |a_1| certifies a basis
cert = verify_basis(c, bm.basis, bm.pivot)
print("det certificate:", cert.det)

# greedy M = {3, 4}: a different basis of the same module
greedy = build_basis(c)
print("greedy M:", greedy.M, "pivot", greedy.pivot)
print("same module as gcd-transform basis:",
      ModuleSpan(greedy.basis, 4) == ModuleSpan(oracle_basis(c), 4))

# two coprime indices use the closed formula
print(build_basis((4, 7, 6), M=(1, 2)).basis)
