"""
Interactions evaluated as a regular cycle
=========================================

Two interactions, one from boundary a to b and one back.  If they evaluate
to mutually inverse maps the cycle is trivially regular: the process can be
run backwards.  If they evaluate to projections the cycle still repeats
after two steps, but only up to an idempotent.
"""

from regobs import Boundary, Generator, Matrix, Signature, TqftAssignment, check_n_regular_tqft, evaluate, glue

a, b = Boundary.of("a"), Boundary.of("b")
sig = Signature(["a", "b"], [Generator("M1", a, b, "M2"), Generator("M2", b, a, "M1")])
m1, m2 = sig.interaction(["M1"]), sig.interaction(["M2"])

A = Matrix([[1, 2], [1, 3]])
for label, f1, f2 in [("reversible", A, A.inverse()), ("projections", Matrix.diag(1, 0), Matrix.diag(1, 0))]:
    F = TqftAssignment(sig, {"a": 2, "b": 2}, {"M1": f1, "M2": f2})
    r = check_n_regular_tqft(F, [m1, m2])
    print(f"{label}: regular = {r.regular}, trivial = {r.trivial}")
    # M1 M2 M1 acts like M1.
    print("  F(M1 M2 M1) == F(M1):", evaluate(F, glue(glue(m1, m2), m1)) == evaluate(F, m1))
    print("  obstruction at a =", r.obstruction[0].to_lists())
