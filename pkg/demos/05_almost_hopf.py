"""
Almost Hopf laws on group algebras
==================================

Convolution s * t = m (s (x) t) comult.  An antipode in the weak sense only
needs S * id * S = S and id * S * id = id.
"""

from regobs import Matrix, check_almost_hopf, convolution
from regobs.algebra import group_algebra, group_inversion

for n in (2, 3, 4):
    b, S = group_algebra(n), group_inversion(n)
    print(f"Z_{n}: almost Hopf with inversion:", check_almost_hopf(b, S))
    print("  id * S =\n" + convolution(b, Matrix.identity(n), S).pretty("    "))

# The zero map respects the product but breaks the second law.
b = group_algebra(2)
print("zero antipode:", check_almost_hopf(b, Matrix.zeros(2, 2)))
