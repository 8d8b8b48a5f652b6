"""
Longer regularity chains
========================

Instead of one companion g with f g f = f, take a chain f, f*, f**, f***
whose full composite followed by f returns f, at every starting point.
"""

from regobs import Matrix, StarChain, build_default_chain, check_star_chain, higher_projector, reduce_4_to_2

f = Matrix([[1, 2], [2, 4]])
chain = build_default_chain(f, 6)
P = higher_projector(chain)
print("higher projector P =\n" + P.pretty("  "))
print("P P == P:", P @ P == P, "  P f == f:", P @ f == f)

# Four maps, none of them a generalized inverse of the first, yet the
# chain closes up.
one, two, quarter = Matrix([[1]]), Matrix([[2]]), Matrix([["1/4"]])
odd = StarChain([one, two, quarter, two])
print("4-regular:", bool(check_star_chain(odd)))
print("f f* f =", one @ two @ one, " (not f)")
# The reduction to ordinary regularity needs f* to be a generalized inverse,
# which fails here, so it declines.
print("reduction applies:", reduce_4_to_2(odd))
print("reduction on the default chain:", reduce_4_to_2(build_default_chain(f, 4)))
