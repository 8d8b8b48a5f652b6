"""
Generalized inverses with a prescribed image and kernel
=======================================================

A map that is not invertible still has inverses in a weaker sense.  Choosing
a complement M of its kernel and a complement N of its image pins one down.
"""

from regobs import Matrix, Subspace, generalized_inverse, lemma3_report

# A nilpotent map: e_2 -> e_1, e_1 -> 0.
f = Matrix([[0, 1], [0, 0]])
g = generalized_inverse(f)
print("f =\n" + f.pretty("  "))
print("g =\n" + g.pretty("  "))
print("f g f == f:", f @ g @ f == f, "  g f g == g:", g @ f @ g == g)

# The default complements are coordinate ones.  Any other complement of
# Im f gives another inverse, with exactly that kernel.
f = Matrix([[1], [0]])
for n in ([[0, 1]], [[1, 1]], [[2, -1]]):
    N = Subspace.span(n, 2)
    g = generalized_inverse(f, n=N)
    print(f"kernel {N}:  g = {g!r}")

# The image/kernel facts that go with any reflexive inverse.
f = Matrix([[1, 2, 3], [2, 4, 6]])
g = generalized_inverse(f)
rep = lemma3_report(f, g)
for law, ok in rep.checks.items():
    print(f"  {law:<30} {ok}")
print("dim Im g + dim Ker f =", rep.im_g.dim + rep.ker_f.dim, "= dim X =", f.ncols)
