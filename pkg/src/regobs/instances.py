"""Small named instances used throughout the tests, demos and CLI fixtures."""

from __future__ import annotations

from .cocycle import Cocycle, RepresentedCategory, category_from_cycle
from .linalg import Matrix

A = Matrix([[1, 2], [1, 3]])
A_INV = A.inverse()
P = Matrix.diag(1, 0)
NILPOTENT = Matrix([[0, 1], [0, 0]])
SWAP = Matrix([[0, 1], [1, 0]])


def invertible_pair() -> Cocycle:
    """``X1 -A-> X2 -A^-1-> X1``: trivially 2-regular."""
    return category_from_cycle([A, A_INV])[1]


def idempotent_pair() -> Cocycle:
    """``X1 -P-> X2 -P-> X1`` with ``P = diag(1, 0)``."""
    return category_from_cycle([P, P])[1]


def idempotent_loop() -> Cocycle:
    """The length-1 cocycle ``X1 -P-> X1``."""
    return category_from_cycle([P])[1]


def nilpotent_triple() -> Cocycle:
    """``[[0,1],[0,0]], diag(1,0), diag(1,0)`` around three objects: not regular."""
    return category_from_cycle([NILPOTENT, P, P])[1]


def mixed_category() -> RepresentedCategory:
    """Objects X1, X2, X3 (all Q^2) with an invertible pair through X1, X2 and
    an idempotent triangle X1 -> X2 -> X3 -> X1."""
    return RepresentedCategory(
        {"X1": 2, "X2": 2, "X3": 2},
        [
            ("a", "X1", "X2", A),
            ("a_inv", "X2", "X1", A_INV),
            ("p1", "X1", "X2", P),
            ("p2", "X2", "X3", P),
            ("p3", "X3", "X1", P),
        ],
    )


def matrix_unit(i: int, j: int) -> Matrix:
    return Matrix([[1 if (r, c) == (i, j) else 0 for c in range(2)] for r in range(2)])


def brandt_category() -> RepresentedCategory:
    """The five-element Brandt semigroup ``{0, E11, E12, E21, E22}`` on Q^2
    as a one-object category."""
    arrows = [("zero", "pt", "pt", Matrix.zeros(2, 2))]
    arrows += [(f"E{i + 1}{j + 1}", "pt", "pt", matrix_unit(i, j)) for i in range(2) for j in range(2)]
    return RepresentedCategory({"pt": 2}, arrows)


BRANDT_INVERSES = {"zero": "zero", "E11": "E11", "E12": "E21", "E21": "E12", "E22": "E22"}


def brandt_cocycles() -> list[Cocycle]:
    cat = brandt_category()
    return [cat.cocycle(a, b) for a, b in BRANDT_INVERSES.items()]
