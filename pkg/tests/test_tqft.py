import pytest

from regobs.errors import (
    BoundaryMismatch,
    NoOppositeDeclared,
    ShapeMismatch,
    UnassignedGenerator,
    UnassignedLabel,
    UnknownName,
)
from regobs.linalg import Matrix
from regobs.tqft import (
    EMPTY,
    Boundary,
    Generator,
    Signature,
    TqftAssignment,
    check_n_regular_tqft,
    evaluate,
    glue,
    opposite,
)

A = Matrix([[1, 2], [1, 3]])
P = Matrix.diag(1, 0)


def signature():
    a, b = Boundary.of("a"), Boundary.of("b")
    return Signature(
        ["a", "b"],
        [
            Generator("M", a, b, "Mop"),
            Generator("Mop", b, a, "M"),
            Generator("cup", EMPTY, a, "cap"),
            Generator("cap", a, EMPTY, "cup"),
            Generator("N", a, a),
            Generator("id_a", a, a, cylinder=True),
            Generator("id_b", b, b, cylinder=True),
        ],
    )


def assignment(m, mop):
    sig = signature()
    maps = {"M": m, "Mop": mop, "cup": Matrix([[1], [0]]), "cap": Matrix([[1, 0]]), "N": Matrix([[0, 1], [0, 0]])}
    return sig, TqftAssignment(sig, {"a": 2, "b": 2}, maps)


def test_boundaries():
    b = Boundary.of("a", "b-")
    assert str(b) == "a ⊔ b*"
    assert b.dual() == Boundary.of("a-", "b")
    assert str(EMPTY) == "∅"
    assert (Boundary.of("a") + EMPTY) == Boundary.of("a")


def test_empty_boundary_has_dimension_one():
    _, F = assignment(A, A.inverse())
    assert F.boundary_dim(EMPTY) == 1
    assert F.boundary_dim(Boundary.of("a", "b-")) == 4


def test_functoriality_on_composable_pairs():
    sig, F = assignment(A, A.inverse())
    words = [["M"], ["Mop"], ["cup"], ["cap"], ["N"], ["id_a"], ["id_b"], ["M", "Mop"], ["cup", "N"]]
    pieces = [sig.interaction(w) for w in words]
    tried = 0
    for m1 in pieces:
        for m2 in pieces:
            if m1.outgoing != m2.incoming:
                continue
            assert evaluate(F, glue(m1, m2)) == evaluate(F, m2) @ evaluate(F, m1)
            tried += 1
    assert tried > 20


def test_cylinders_are_neutral():
    sig, F = assignment(P, P)
    m = sig.interaction(["M"])
    assert glue(sig.cylinder(m.incoming), m) == m
    assert evaluate(F, glue(m, sig.interaction(["id_b"]))) == evaluate(F, m)
    assert evaluate(F, sig.cylinder(Boundary.of("a", "b"))) == Matrix.identity(4)


def test_cup_cap():
    sig, F = assignment(A, A.inverse())
    closed = glue(sig.interaction(["cup"]), sig.interaction(["cap"]))
    assert closed.is_closed
    assert evaluate(F, closed) == Matrix([[1]])
    assert not glue(sig.interaction(["cap"]), sig.interaction(["cup"])).is_closed


def test_opposites():
    sig, _ = assignment(A, A.inverse())
    m = sig.interaction(["cup", "M"])
    op = opposite(m)
    assert op.body == ("Mop", "cap")
    assert opposite(op) == m
    with pytest.raises(NoOppositeDeclared):
        opposite(sig.interaction(["N"]))


def test_reversible_pair_is_trivially_regular():
    sig, F = assignment(A, A.inverse())
    report = check_n_regular_tqft(F, [sig.interaction(["M"]), sig.interaction(["Mop"])])
    assert report.regular and report.trivial


def test_two_regular_interaction_pattern():
    # M1 M2 M1 evaluates like M1, and M2 M1 M2 like M2.
    sig, F = assignment(P, P)
    m1, m2 = sig.interaction(["M"]), sig.interaction(["Mop"])
    assert evaluate(F, glue(glue(m1, m2), m1)) == evaluate(F, m1)
    assert evaluate(F, glue(glue(m2, m1), m2)) == evaluate(F, m2)
    report = check_n_regular_tqft(F, [m1, m2])
    assert report.regular and not report.trivial
    assert list(report.obstruction.endomaps) == [P, P]


def test_irregular_cycle():
    sig, F = assignment(P, P)
    report = check_n_regular_tqft(F, [sig.interaction(["N"])])
    assert not report.regular


def test_errors():
    sig, F = assignment(A, A.inverse())
    with pytest.raises(BoundaryMismatch):
        sig.interaction(["M", "M"])
    with pytest.raises(BoundaryMismatch):
        glue(sig.interaction(["M"]), sig.interaction(["M"]))
    with pytest.raises(BoundaryMismatch):
        check_n_regular_tqft(F, [sig.interaction(["M"])])
    with pytest.raises(UnknownName):
        sig.interaction(["nope"])
    with pytest.raises(ShapeMismatch):
        TqftAssignment(sig, {"a": 2, "b": 2}, {"M": Matrix([[1]])})
    partial = TqftAssignment(sig, {"a": 2}, {})
    with pytest.raises(UnassignedLabel):
        partial.boundary_dim(Boundary.of("b"))
    with pytest.raises(UnassignedGenerator):
        evaluate(partial, sig.interaction(["N"]))
    with pytest.raises(BoundaryMismatch):
        Signature(["a"], [Generator("x", Boundary.of("a"), EMPTY, "y"), Generator("y", Boundary.of("a"), EMPTY, "x")])
