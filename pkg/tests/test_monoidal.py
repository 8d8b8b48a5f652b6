import random

import pytest

from regobs import instances
from regobs.cocycle import RepresentedCategory, category_from_cycle, lift_construct, require_regular, verify_cocycle
from regobs.errors import ImageNotACocycle, LengthMismatch, NotRegular
from regobs.generators import random_lift_data
from regobs.linalg import Matrix
from regobs.monoidal import (
    FunctorData,
    dual_cocycle,
    dual_name,
    evaluation_pairing,
    functor_report,
    identity_functor,
    image_cocycle,
    natural_transformation_check,
    pairing_check,
    pairing_report,
    tensor_cocycles,
)


def cocycle_corpus():
    rng = random.Random(17)
    out = [instances.invertible_pair(), instances.idempotent_pair(), instances.idempotent_loop()]
    out += instances.brandt_cocycles()
    out += [lift_construct(random_lift_data(rng, rng.randint(1, 4), max_big=3, max_small=2))[1] for _ in range(12)]
    return out


def test_tensor_obstruction_is_kronecker():
    cs = cocycle_corpus()
    pairs = 0
    for c1 in cs:
        for c2 in cs:
            if c1.n != c2.n:
                continue
            t = tensor_cocycles(c1, c2)
            ob, o1, o2 = require_regular(t), require_regular(c1), require_regular(c2)
            assert all(ob[i] == o1[i].kron(o2[i]) for i in range(t.n))
            pairs += 1
    assert pairs > 20


def test_tensor_names_and_errors():
    t = tensor_cocycles(instances.invertible_pair(), instances.idempotent_pair())
    assert t.objects == ("X1⊗X1", "X2⊗X2")
    with pytest.raises(LengthMismatch):
        tensor_cocycles(instances.invertible_pair(), instances.idempotent_loop())
    with pytest.raises(NotRegular):
        tensor_cocycles(instances.nilpotent_triple(), instances.nilpotent_triple())


def test_dual_and_double_dual():
    for c in cocycle_corpus():
        d = dual_cocycle(c)
        assert verify_cocycle(d)
        assert dual_cocycle(d).same_data(c)


def test_dual_layout():
    _, c = category_from_cycle([Matrix([[1, 2]]), Matrix([[1], [0]])])
    d = dual_cocycle(c)
    assert d.objects == ("X1*", "X2*")
    assert d.arrows == ("f2*", "f1*")
    assert d.maps == (Matrix([[1, 0]]), Matrix([[1], [2]]))
    assert dual_name("X*") == "X"


def test_evaluation_pairing():
    g = evaluation_pairing(2)
    xi, x = Matrix.column([1, 2]), Matrix.column([3, 4])
    assert g @ xi.kron(x) == Matrix([[11]])


def test_pairing_on_corpus():
    for c in cocycle_corpus():
        rep = pairing_report(c)
        assert rep.holds
        assert len(rep.adjunction) == len(rep.obstruction_symmetry) == c.n
    assert pairing_check(instances.idempotent_pair())


def conjugate_setup():
    src = RepresentedCategory({"X1": 2, "X2": 2}, [("p", "X1", "X2", instances.P), ("q", "X2", "X1", instances.P)])
    q = instances.A @ instances.P @ instances.A_INV
    dst = RepresentedCategory({"Y1": 2, "Y2": 2}, [("p'", "Y1", "Y2", q), ("q'", "Y2", "Y1", q)])
    F = FunctorData({"X1": "Y1", "X2": "Y2"}, {"p": "p'", "q": "q'"}, {"X1": instances.A, "X2": instances.A})
    return src, dst, F


def test_functor_with_transports():
    src, dst, F = conjugate_setup()
    rep = functor_report(src, dst, F, [src.cocycle("p", "q")])
    assert rep.holds and not rep.failures
    plain = FunctorData(F.object_map, F.arrow_map)
    rep = functor_report(src, dst, plain, [src.cocycle("p", "q")])
    assert rep.composition and rep.absorption and not rep.obstruction


def test_functor_composites_and_identity():
    cat = instances.mixed_category()
    cs = [cat.cocycle("a", "a_inv"), cat.cocycle("p1", "p2", "p3")]
    ident = identity_functor(cat)
    assert functor_report(cat, cat, ident, cs).holds
    assert functor_report(cat, cat, ident.then(ident), cs).holds


def test_image_must_close():
    cat = instances.mixed_category()
    bad = FunctorData({"X1": "X1", "X2": "X2"}, {"a": "a", "a_inv": "p1"})
    with pytest.raises(ImageNotACocycle):
        image_cocycle(cat, bad, cat.cocycle("a", "a_inv"))


def test_natural_transformation():
    src, dst, F = conjugate_setup()
    cs = [src.cocycle("p", "q")]
    two = Matrix.diag(2, 2)
    assert natural_transformation_check(dst, F, F, {"X1": two, "X2": two}, cs)
    v = natural_transformation_check(dst, F, F, {"X1": two, "X2": Matrix.identity(2)}, cs)
    assert not v and v.failing_square == (0, 1)
