"""Small hand-checked values pinned as regression tests."""

from regobs import instances
from regobs.algebra import (
    check_regular_module,
    convolution,
    coordinate_algebra,
    group_algebra,
    group_inversion,
    hom_m_check,
)
from regobs.cocycle import category_from_cycle, require_regular
from regobs.linalg import Matrix
from regobs.monoidal import FunctorData, functor_report, identity_functor, natural_transformation_check

Q = Matrix.diag(0, 1)


def test_id_star_id_squares():
    b = group_algebra(2)
    i = Matrix.identity(2)
    assert convolution(b, i, i) == Matrix([[1, 1], [0, 0]])
    z = Matrix.zeros(2, 2)
    assert convolution(b, z, z) == z


def test_hom_m_examples():
    b = group_algebra(2)
    assert hom_m_check(b, Matrix.identity(2))
    assert hom_m_check(b, group_inversion(2))
    # 1 -> 1, g -> 1 + g: s(g g) = 1 but s(g) s(g) = 2 + 2g
    assert not hom_m_check(b, Matrix([[1, 1], [0, 1]]))


def test_swap_relabelling_functor():
    src, c = category_from_cycle([instances.P, instances.P])
    dst, d = category_from_cycle([Q, Q])
    F = FunctorData({"X1": "X1", "X2": "X2"}, {"f1": "f1", "f2": "f2"},
                    {"X1": instances.SWAP, "X2": instances.SWAP})
    assert functor_report(src, dst, F, [c]).holds
    assert require_regular(d)[0] == Q


def test_functor_onto_invertible_pair_breaks_obstruction():
    src, c = category_from_cycle([instances.P, instances.P])
    dst = instances.invertible_pair().category
    F = FunctorData({"X1": "X1", "X2": "X2"}, {"f1": "f1", "f2": "f2"})
    rep = functor_report(src, dst, F, [c])
    assert not rep.obstruction and not rep.holds


def test_obstructions_form_a_natural_transformation():
    c = instances.idempotent_pair()
    ident = identity_functor(c.category)
    e = require_regular(c)
    assert natural_transformation_check(c.category, ident, ident, dict(zip(c.objects, e)), [c])


def test_module_with_zero_algebra_obstruction():
    rho = Matrix([[1, 0]])
    assert check_regular_module(coordinate_algebra(2), 1, rho, Matrix([[1]]))
    # left side rho o (0 (x) id) = 0, right side id o rho = rho
    assert not check_regular_module(coordinate_algebra(2, Matrix.zeros(2, 2)), 1, rho, Matrix([[1]]))
