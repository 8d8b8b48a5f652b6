"""Even-length star chains ``[f, f*, f**, ...]`` and their regularity.

A chain of length ``n = 2k`` alternates between maps ``X -> Y`` (even
positions) and ``Y -> X`` (odd positions).  It is n-regular when, for every
position ``i``, composing the whole chain starting at ``i`` and then applying
the map at ``i`` once more gives that map back::

    m_i o m_{i+1} o ... o m_{i+n-1} o m_i = m_i      (indices mod n)

Odd lengths are rejected; odd cycles are handled by cocycles instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    NotNRegular,
    OddChainLength,
    TheoremContradiction,
)
from .geninverse import generalized_inverse, is_generalized_inverse
from .linalg import Matrix, compose, image, witness_vector


@dataclass(frozen=True)
class StarChain:
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        n = len(self.maps)
        if n < 2 or n % 2:
            raise OddChainLength(f"star chains need an even length >= 2, got {n}")
        q, p = self.maps[0].shape
        for i, m in enumerate(self.maps):
            want = (q, p) if i % 2 == 0 else (p, q)
            if m.shape != want:
                raise DimensionMismatch(f"map {i} has shape {m.shape}, expected {want}")

    @property
    def n(self) -> int:
        return len(self.maps)

    @property
    def f(self) -> Matrix:
        return self.maps[0]

    def cycle_product(self, i: int) -> Matrix:
        """``m_i o m_{i+1} o ... o m_{i+n-1}``."""
        n = self.n
        return compose(*(self.maps[(i + k) % n] for k in range(n)))

    def rotate(self, k: int) -> "StarChain":
        if k % 2:
            raise OddChainLength("rotations must be by an even number of places")
        k %= self.n
        return StarChain(self.maps[k:] + self.maps[:k])


@dataclass(frozen=True)
class ChainVerdict:
    holds: bool
    failing_index: int | None = None  # 0-based position in the chain
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_star_chain(chain: StarChain) -> ChainVerdict:
    for i, m in enumerate(chain.maps):
        lhs = chain.cycle_product(i) @ m
        if lhs != m:
            return ChainVerdict(False, i, witness_vector(lhs, m))
    return ChainVerdict(True)


def higher_projector(chain: StarChain) -> Matrix:
    """``P = f o f* o ... o f^(n-1 stars)``, an idempotent fixing ``f``."""
    verdict = check_star_chain(chain)
    if not verdict:
        raise NotNRegular(f"chain identity {verdict.failing_index} fails", verdict.failing_index)
    return chain.cycle_product(0)


def build_default_chain(f: Matrix, n: int) -> StarChain:
    """The alternating witness ``[f, g, f, g, ...]`` with ``g`` a generalized
    inverse of ``f``."""
    if n < 2 or n % 2:
        raise OddChainLength(f"star chains need an even length >= 2, got {n}")
    g = generalized_inverse(f)
    return StarChain(tuple(f if i % 2 == 0 else g for i in range(n)))


def restrictions_agree(a: Matrix, b: Matrix, on: Matrix) -> bool:
    """Whether ``a`` and ``b`` agree on the image of ``on``."""
    basis = image(on).as_columns()
    return a @ basis == b @ basis


def reduce_4_to_2(chain: StarChain) -> bool:
    """Reduce 4-regularity of ``[f, f*, f**, f***]`` to two 2-regularities.

    The reduction applies when the chain is 4-regular, ``f*`` is a generalized
    inverse of ``f`` (equivalently, it is the inverse built from the
    projectors of some pair of decompositions ``X = M (+) Ker f`` and
    ``Y = Im f (+) N``), and ``f*`` agrees with ``f***`` on ``Im f``.  Returns
    whether those hypotheses hold.  When they do, ``f f* f = f`` and
    ``f* f** f* = f*`` must follow; a failure raises TheoremContradiction.

    Agreement on ``Im f`` alone is not enough: for 1x1 maps ``f = 1``,
    ``f* = f*** = 2``, ``f** = 1/4`` the chain is 4-regular yet ``f f* f != f``.
    """
    if chain.n != 4:
        raise DimensionMismatch(f"reduce_4_to_2 needs a chain of length 4, got {chain.n}")
    verdict = check_star_chain(chain)
    if not verdict:
        raise NotNRegular(f"chain identity {verdict.failing_index} fails", verdict.failing_index)
    f, f1, f2, f3 = chain.maps
    if not (restrictions_agree(f1, f3, f) and is_generalized_inverse(f, f1)):
        return False
    if f @ f1 @ f != f:
        raise TheoremContradiction("hypotheses hold but f f* f != f")
    if f1 @ f2 @ f1 != f1:
        raise TheoremContradiction("hypotheses hold but f* f** f* != f*")
    return True
