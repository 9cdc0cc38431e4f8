"""
Generators and relations
========================

"""

from unimodular import Coefficients
from unimodular.matrix import snf
from unimodular.presentation import build_presentation, relation_residuals, verify_presentation

c = Coefficients((12, 4, 2, 3))
p = build_presentation(c, (3, 4))
print("generator pairs:", p.D_pairs)
print("relation triples:", p.E_triples)
print(p.rel)

# every column combines the generators to zero
print("residuals:", relation_residuals(p))

# Smith form diag(1, 1): the relations are defining
print("Smith diagonal:", snf(p.rel).invariant_factors)
print(verify_presentation(c, p))

# the full index set gives the 6 x 4 pattern
print(build_presentation(c, (1, 2, 3, 4)).rel)
