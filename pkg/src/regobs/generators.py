"""Seeded random rational instances for property checks and demos."""

from __future__ import annotations

import random
from fractions import Fraction

from .cocycle import LiftData
from .geninverse import generalized_inverse
from .linalg import Matrix, compose


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    """Numerator in [-bound, bound], denominator in [1, bound]."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 5, density: float = 1.0) -> Matrix:
    return Matrix(
        [[random_rational(rng, bound) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)],
        shape=(rows, cols),
    )


def random_rank_matrix(rng: random.Random, rows: int, cols: int, rank: int, bound: int = 3) -> Matrix:
    """A ``rows x cols`` matrix of rank at most ``rank`` (a thin product)."""
    if rank == 0:
        return Matrix.zeros(rows, cols)
    return random_matrix(rng, rows, rank, bound) @ random_matrix(rng, rank, cols, bound)


def random_invertible(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    while True:
        m = random_matrix(rng, n, n, bound)
        if m.is_invertible():
            return m


def random_injective(rng: random.Random, rows: int, cols: int, bound: int = 5) -> Matrix:
    while True:
        m = random_matrix(rng, rows, cols, bound)
        if m.rank() == cols:
            return m


def random_left_inverse(rng: random.Random, iota: Matrix, bound: int = 3) -> Matrix:
    """A random ``pi`` with ``pi o iota = id`` (not the canonical one in general)."""
    base = generalized_inverse(iota)
    w = random_matrix(rng, iota.ncols, iota.nrows, bound)
    return base + w @ (Matrix.identity(iota.nrows) - iota @ base)


def corpus_matrix(rng: random.Random, max_dim: int = 6) -> Matrix:
    """One corpus draw: shapes 1..max_dim, a mix of generic, sparse and
    rank-deficient matrices."""
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    kind = rng.random()
    if kind < 0.4:
        return random_matrix(rng, r, c)
    if kind < 0.6:
        return random_matrix(rng, r, c, density=0.3)
    return random_rank_matrix(rng, r, c, rng.randint(0, min(r, c)))


def random_lift_data(rng: random.Random, n: int, max_big: int = 5, max_small: int = 3) -> LiftData:
    """Random retractions and an invertible small cycle closed by its inverse."""
    r = rng.randint(0, max_small)
    bigs = [rng.randint(max(r, 1), max_big) for _ in range(n)]
    iotas = [random_injective(rng, b, r) if r else Matrix.zeros(b, 0) for b in bigs]
    pis = [random_left_inverse(rng, i) if r else Matrix.zeros(0, i.nrows) for i in iotas]
    small = [random_invertible(rng, r) if r else Matrix.zeros(0, 0) for _ in range(n - 1)]
    closing = compose(*reversed(small)).inverse() if small and r else Matrix.identity(r)
    return LiftData(tuple(iotas), tuple(pis), tuple(small) + (closing,))


def random_lift_chain_data(rng: random.Random, max_big: int = 5, max_small: int = 3) -> LiftData:
    """Length-4 lift data on spaces ``X, Y, X, Y`` whose star chain satisfies
    the hypotheses of the 4-to-2 reduction, with all four companions
    generically distinct.

    Positions 1 and 3 share the inclusion into ``X`` but use different
    left inverses; likewise positions 2 and 4 for ``Y``.  The small cycle is
    ``a, a^-1, a, a^-1``.
    """
    r = rng.randint(1, max_small)
    p, q = rng.randint(r, max_big), rng.randint(r, max_big)
    iota_x, iota_y = random_injective(rng, p, r), random_injective(rng, q, r)
    pi_x1, pi_x3 = random_left_inverse(rng, iota_x), random_left_inverse(rng, iota_x)
    pi_y2, pi_y4 = random_left_inverse(rng, iota_y), random_left_inverse(rng, iota_y)
    a = random_invertible(rng, r)
    a_inv = a.inverse()
    return LiftData(
        (iota_x, iota_y, iota_x, iota_y),
        (pi_x1, pi_y2, pi_x3, pi_y4),
        (a, a_inv, a, a_inv),
    )
