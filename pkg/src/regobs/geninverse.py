"""Inner, outer and reflexive generalized inverses of linear maps.

``g`` is an inner inverse of ``f`` when ``f g f = f`` and an outer inverse
when ``g f g = g``; a generalized (reflexive) inverse is both.  The
constructive route fixes a complement ``M`` of ``Ker f`` and a complement
``N`` of ``Im f`` and returns the unique generalized inverse with image ``M``
and kernel ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    InconsistentSystem,
    InternalConsistencyError,
    NotADirectSum,
    NotAGeneralizedInverse,
    NotAnInnerInverse,
)
from .linalg import (
    Matrix,
    Subspace,
    complement,
    image,
    is_direct_sum,
    kernel,
    projector_onto,
    solve,
    witness_vector,
)


@dataclass(frozen=True)
class InverseReport:
    is_inner: bool
    is_outer: bool
    # e_j on which the first failing identity differs
    witness_vector: Matrix | None = None

    @property
    def is_reflexive(self) -> bool:
        return self.is_inner and self.is_outer


def _check_pair(f: Matrix, g: Matrix) -> None:
    if g.domain_dim != f.codomain_dim or g.codomain_dim != f.domain_dim:
        raise DimensionMismatch(f"f is {f.shape}, candidate inverse is {g.shape}; expected {f.shape[::-1]}")


def is_inner_inverse(f: Matrix, g: Matrix) -> bool:
    _check_pair(f, g)
    return f @ g @ f == f


def is_outer_inverse(f: Matrix, g: Matrix) -> bool:
    _check_pair(f, g)
    return g @ f @ g == g


def inverse_report(f: Matrix, g: Matrix) -> InverseReport:
    _check_pair(f, g)
    fgf, gfg = f @ g @ f, g @ f @ g
    inner, outer = fgf == f, gfg == g
    witness = None
    if not inner:
        witness = witness_vector(fgf, f)
    elif not outer:
        witness = witness_vector(gfg, g)
    return InverseReport(inner, outer, witness)


def is_generalized_inverse(f: Matrix, g: Matrix) -> bool:
    return inverse_report(f, g).is_reflexive


def reflexive_from_inner(f: Matrix, g_in: Matrix) -> Matrix:
    """Turn an inner inverse into a generalized inverse via ``g f g``."""
    if not is_inner_inverse(f, g_in):
        raise NotAnInnerInverse("f g f != f")
    g = g_in @ f @ g_in
    if not (is_inner_inverse(f, g) and is_outer_inverse(f, g)):
        raise InternalConsistencyError("g f g failed to be a generalized inverse")
    return g


def generalized_inverse(f: Matrix, m: Subspace | None = None, n: Subspace | None = None) -> Matrix:
    """Generalized inverse of ``f`` with image ``m`` and kernel ``n``.

    ``m`` must complement ``Ker f`` in the domain and ``n`` must complement
    ``Im f`` in the codomain.  Either defaults to the coordinate complement
    (see ``linalg.complement``).  The result is ``i o (f|_m)^-1 o Q`` where
    ``Q`` projects onto ``Im f`` along ``n``.
    """
    ker, im = kernel(f), image(f)
    if m is None:
        m = complement(ker)
    if n is None:
        n = complement(im)
    if not is_direct_sum(m, ker):
        raise NotADirectSum(f"M = {m} does not complement Ker f = {ker}")
    if not is_direct_sum(im, n):
        raise NotADirectSum(f"N = {n} does not complement Im f = {im}")

    q = projector_onto(im, n)
    basis_m = m.as_columns()
    restricted = f @ basis_m  # injective, onto Im f
    try:
        coords = solve(restricted, q)
    except InconsistentSystem as exc:  # pragma: no cover - impossible by construction
        raise InternalConsistencyError("f restricted to M does not reach Im f") from exc
    return basis_m @ coords


def range_projectors(f: Matrix, g: Matrix) -> tuple[Matrix, Matrix]:
    """``(f g, g f)``: projectors of the codomain onto ``Im f`` and of the
    domain onto ``Im g``."""
    if not is_generalized_inverse(f, g):
        raise NotAGeneralizedInverse("g is not a generalized inverse of f")
    pf, pg = f @ g, g @ f
    if not all(projector_identities(f, g).values()):
        raise InternalConsistencyError("projector identities failed for a generalized inverse")
    return pf, pg


def projector_identities(f: Matrix, g: Matrix) -> dict[str, bool]:
    _check_pair(f, g)
    pf, pg = f @ g, g @ f
    return {
        "P_f idempotent": pf @ pf == pf,
        "P_f f = f P_g = f": pf @ f == f and f @ pg == f,
        "P_g idempotent": pg @ pg == pg,
        "P_g g = g P_f = g": pg @ g == g and g @ pf == g,
    }


@dataclass(frozen=True)
class ImageKernelReport:
    """Image/kernel identities and the two decompositions for a pair (f, g)."""

    im_f: Subspace
    ker_f: Subspace
    im_g: Subspace
    ker_g: Subspace
    checks: dict

    @property
    def all_hold(self) -> bool:
        return all(self.checks.values())


def lemma3_report(f: Matrix, g: Matrix) -> ImageKernelReport:
    if not is_generalized_inverse(f, g):
        raise NotAGeneralizedInverse("g is not a generalized inverse of f")
    fg, gf = f @ g, g @ f
    im_f, ker_f, im_g, ker_g = image(f), kernel(f), image(g), kernel(g)
    restricted = f @ im_g.as_columns()
    checks = {
        "Im f = Im(f g)": im_f == image(fg),
        "Ker(f g) = Ker g": kernel(fg) == ker_g,
        "Im(g f) = Im g": image(gf) == im_g,
        "Ker(g f) = Ker f": kernel(gf) == ker_f,
        "X = Im g (+) Ker f": is_direct_sum(im_g, ker_f),
        "Y = Im f (+) Ker g": is_direct_sum(im_f, ker_g),
        "f|Im g injective onto Im f": restricted.rank() == im_g.dim and image(restricted) == im_f
        if im_g.dim
        else im_f.dim == 0,
    }
    return ImageKernelReport(im_f, ker_f, im_g, ker_g, checks)
