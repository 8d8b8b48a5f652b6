import random

import pytest

from oracles import rank
from regobs import instances
from regobs.cocycle import (
    LiftData,
    MorphismKind,
    RepresentedCategory,
    category_from_cycle,
    cocycle_morphism_check,
    compose_ladders,
    conjugate_cocycle,
    invert_ladder,
    lift_construct,
    obstruction_degree,
    obstruction_relations,
    require_regular,
    verify_cocycle,
)
from regobs.errors import (
    DimensionMismatch,
    LengthMismatch,
    NotRegular,
    ObjectNotOnCocycle,
    RetractionFailure,
    SmallCycleNotTrivial,
    UnknownName,
)
from regobs.generators import random_lift_data
from regobs.linalg import Matrix


def test_invertible_pair_is_trivial():
    report = verify_cocycle(instances.invertible_pair())
    assert report.regular and report.trivial


def test_idempotent_pair():
    report = verify_cocycle(instances.idempotent_pair())
    assert report.regular and not report.trivial
    assert list(report.obstruction.endomaps) == [instances.P, instances.P]


def test_length_one_cocycle():
    report = verify_cocycle(instances.idempotent_loop())
    assert report.regular
    assert report.obstruction[0] == instances.P


def test_nilpotent_triple_fails_at_first_arrow():
    report = verify_cocycle(instances.nilpotent_triple())
    assert not report.regular
    assert report.failing_index == 1
    assert report.witness == Matrix.column([0, 1])
    with pytest.raises(NotRegular) as err:
        require_regular(instances.nilpotent_triple())
    assert err.value.index == 1


def test_relations_hold_at_every_position():
    c = instances.idempotent_pair()
    ob = require_regular(c)
    assert all(all(r) for r in obstruction_relations(c, ob))


def test_degree():
    cat = instances.mixed_category()
    pair = cat.cocycle("a", "a_inv")
    tri = cat.cocycle("p1", "p2", "p3")
    assert obstruction_degree([pair], "X1") == "trivial"
    assert obstruction_degree([pair, tri], "X1") == 3
    assert obstruction_degree([instances.idempotent_pair()], "X1") == 2
    with pytest.raises(ObjectNotOnCocycle):
        obstruction_degree([pair], "X3")


def test_brandt_semigroup_cocycles():
    for c in instances.brandt_cocycles():
        report = verify_cocycle(c)
        assert report.regular
        assert all(e.is_idempotent() for e in report.obstruction.endomaps)


def test_category_validation():
    with pytest.raises(UnknownName):
        RepresentedCategory({"X": 1}, [("f", "X", "Y", Matrix([[1]]))])
    with pytest.raises(DimensionMismatch):
        RepresentedCategory({"X": 1, "Y": 2}, [("f", "X", "Y", Matrix([[1]]))])
    cat = RepresentedCategory({"X": 1, "Y": 1}, [("f", "X", "Y", Matrix([[1]]))])
    with pytest.raises(UnknownName):
        cat.cocycle("g")
    with pytest.raises(DimensionMismatch):
        cat.cocycle("f")  # not closed
    with pytest.raises(LengthMismatch):
        category_from_cycle([])


def test_lift_random_instances():
    rng = random.Random(5)
    for _ in range(30):
        data = random_lift_data(rng, rng.randint(1, 5))
        _, c, ob = lift_construct(data)
        assert verify_cocycle(c)
        for i in range(c.n):
            assert rank(ob[i]) == data.small_dims[i]
            assert ob[i] == data.inclusions[i] @ data.projections[i]


def test_lift_validation():
    iota = Matrix([[1], [0]])
    good = LiftData((iota, iota), (Matrix([[1, 0]]), Matrix([[1, 0]])), (Matrix([[2]]), Matrix([["1/2"]])))
    lift_construct(good)
    bad_pi = LiftData((iota, iota), (Matrix([[2, 0]]), Matrix([[1, 0]])), good.small_maps)
    with pytest.raises(RetractionFailure) as err:
        lift_construct(bad_pi)
    assert err.value.index == 1
    bad_cycle = LiftData(good.inclusions, good.projections, (Matrix([[2]]), Matrix([[2]])))
    with pytest.raises(SmallCycleNotTrivial):
        lift_construct(bad_cycle)
    with pytest.raises(DimensionMismatch):
        LiftData((iota,), (Matrix([[1, 0, 0]]),), (Matrix([[1]]),))


def test_morphisms_and_ladders():
    c = instances.idempotent_pair()
    alphas = [instances.A, instances.A]
    d = conjugate_cocycle(c, alphas)
    assert d.maps[0] == Matrix([[3, -2], [3, -2]])
    assert cocycle_morphism_check(c, d, alphas) is MorphismKind.EQUIVALENCE
    assert cocycle_morphism_check(d, c, invert_ladder(alphas)) is MorphismKind.EQUIVALENCE
    ident = compose_ladders(invert_ladder(alphas), alphas)
    assert all(a.is_identity() for a in ident)
    assert cocycle_morphism_check(c, c, [instances.P, instances.P]) is MorphismKind.MORPHISM
    assert cocycle_morphism_check(c, d, [Matrix.identity(2)] * 2) is MorphismKind.NOT_A_MORPHISM
    with pytest.raises(LengthMismatch):
        cocycle_morphism_check(c, d, alphas[:1])


def test_equivalences_compose():
    c = instances.idempotent_pair()
    a1 = [instances.A, instances.A]
    a2 = [instances.SWAP, instances.SWAP]
    d = conjugate_cocycle(c, a1)
    e = conjugate_cocycle(d, a2)
    assert cocycle_morphism_check(c, e, compose_ladders(a2, a1)) is MorphismKind.EQUIVALENCE
