"""Finite-dimensional algebras, coalgebras and almost bialgebras carrying an
idempotent obstruction ``e``.

Structure maps are matrices on Kronecker-ordered tensor powers: a
multiplication is ``d x d^2``, a comultiplication ``d^2 x d``.  The duality
pairing is the dual-basis pairing, so dualizing is transposition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    InternalConsistencyError,
    InvariantViolation,
    NotMultiplicative,
    NotRegularAlgebra,
)
from .linalg import Matrix


def _eye(d: int) -> Matrix:
    return Matrix.identity(d)


def swap(d1: int, d2: int) -> Matrix:
    """``x (x) y -> y (x) x`` from ``Q^d1 (x) Q^d2`` to ``Q^d2 (x) Q^d1``."""
    rows = [[0] * (d1 * d2) for _ in range(d1 * d2)]
    for i in range(d1):
        for j in range(d2):
            rows[j * d1 + i][i * d2 + j] = 1
    return Matrix(rows, shape=(d1 * d2, d1 * d2))


def _check_idempotent(e: Matrix, d: int, what: str) -> None:
    if e.shape != (d, d):
        raise DimensionMismatch(f"{what} has shape {e.shape}, expected {(d, d)}")
    if not e.is_idempotent():
        raise InvariantViolation(f"{what} is not idempotent")


@dataclass(frozen=True)
class ObstructedAlgebra:
    dim: int
    mult: Matrix
    obstruction: Matrix

    def __post_init__(self):
        d = self.dim
        if self.mult.shape != (d, d * d):
            raise DimensionMismatch(f"multiplication has shape {self.mult.shape}, expected {(d, d * d)}")
        _check_idempotent(self.obstruction, d, "obstruction")
        m, i = self.mult, _eye(d)
        if m @ m.kron(i) != m @ i.kron(m):
            raise InvariantViolation("multiplication is not associative")

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        return self.mult @ x.kron(y)


@dataclass(frozen=True)
class ObstructedCoalgebra:
    dim: int
    comult: Matrix
    obstruction: Matrix

    def __post_init__(self):
        d = self.dim
        if self.comult.shape != (d * d, d):
            raise DimensionMismatch(f"comultiplication has shape {self.comult.shape}, expected {(d * d, d)}")
        _check_idempotent(self.obstruction, d, "obstruction")
        c, i = self.comult, _eye(d)
        if c.kron(i) @ c != i.kron(c) @ c:
            raise InvariantViolation("comultiplication is not coassociative")


@dataclass(frozen=True)
class AlmostBialgebra:
    algebra: ObstructedAlgebra
    coalgebra: ObstructedCoalgebra
    unit: Matrix | None = None  # d x 1
    counit: Matrix | None = None  # 1 x d

    def __post_init__(self):
        a, c = self.algebra, self.coalgebra
        d = a.dim
        if c.dim != d or c.obstruction != a.obstruction:
            raise InvariantViolation("algebra and coalgebra must share dimension and obstruction")
        m, delta = a.mult, c.comult
        middle = _eye(d).kron(swap(d, d)).kron(_eye(d))
        if delta @ m != m.kron(m) @ middle @ delta.kron(delta):
            raise InvariantViolation("comultiplication is not multiplicative")
        if self.unit is not None:
            if self.unit.shape != (d, 1):
                raise DimensionMismatch(f"unit has shape {self.unit.shape}, expected {(d, 1)}")
            if m @ self.unit.kron(_eye(d)) != _eye(d) or m @ _eye(d).kron(self.unit) != _eye(d):
                raise InvariantViolation("unit is not two-sided")
        if self.counit is not None:
            if self.counit.shape != (1, d):
                raise DimensionMismatch(f"counit has shape {self.counit.shape}, expected {(1, d)}")
            if self.counit.kron(_eye(d)) @ delta != _eye(d) or _eye(d).kron(self.counit) @ delta != _eye(d):
                raise InvariantViolation("counit is not two-sided")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> Matrix:
        return self.algebra.mult

    @property
    def comult(self) -> Matrix:
        return self.coalgebra.comult


def check_regular_algebra(a: ObstructedAlgebra) -> bool:
    """``m o (e (x) e) = e o m``."""
    e = a.obstruction
    return a.mult @ e.kron(e) == e @ a.mult


def check_regular_coalgebra(c: ObstructedCoalgebra) -> bool:
    """``comult o e = (e (x) e) o comult``."""
    e = c.obstruction
    return c.comult @ e == e.kron(e) @ c.comult


def _endo(b: AlmostBialgebra, *maps: Matrix) -> None:
    for s in maps:
        if s.shape != (b.dim, b.dim):
            raise DimensionMismatch(f"expected an endomap of Q^{b.dim}, got shape {s.shape}")


def convolution(b: AlmostBialgebra, s: Matrix, t: Matrix) -> Matrix:
    """``s * t = m o (s (x) t) o comult``."""
    _endo(b, s, t)
    return b.mult @ s.kron(t) @ b.comult


def hom_m_check(b: AlmostBialgebra | ObstructedAlgebra, s: Matrix) -> bool:
    """``s o m = m o (s (x) s)``."""
    a = b.algebra if isinstance(b, AlmostBialgebra) else b
    if s.shape != (a.dim, a.dim):
        raise DimensionMismatch(f"expected an endomap of Q^{a.dim}, got shape {s.shape}")
    return s @ a.mult == a.mult @ s.kron(s)


def check_almost_hopf(b: AlmostBialgebra, antipode: Matrix) -> bool:
    """``S * id * S = S`` and ``id * S * id = id`` for a multiplicative ``S``."""
    _endo(b, antipode)
    if not hom_m_check(b, antipode):
        raise NotMultiplicative("antipode candidate does not respect the multiplication")
    i, s = _eye(b.dim), antipode
    for x, y, z in ((s, i, s), (i, s, i)):
        left = convolution(b, convolution(b, x, y), z)
        right = convolution(b, x, convolution(b, y, z))
        if left != right:
            raise InternalConsistencyError("convolution is not associative on a bialgebra")
    sis = convolution(b, convolution(b, s, i), s)
    isi = convolution(b, convolution(b, i, s), i)
    return sis == s and isi == i


def dualize_algebra(a: ObstructedAlgebra) -> ObstructedCoalgebra:
    if not check_regular_algebra(a):
        raise NotRegularAlgebra("algebra does not satisfy m o (e (x) e) = e o m")
    c = ObstructedCoalgebra(a.dim, a.mult.T, a.obstruction.T)
    if not check_regular_coalgebra(c):
        raise InternalConsistencyError("dual of a regular algebra is not a regular coalgebra")
    return c


def dualize_coalgebra(c: ObstructedCoalgebra) -> ObstructedAlgebra:
    if not check_regular_coalgebra(c):
        raise NotRegularAlgebra("coalgebra does not satisfy comult o e = (e (x) e) o comult")
    a = ObstructedAlgebra(c.dim, c.comult.T, c.obstruction.T)
    if not check_regular_algebra(a):
        raise InternalConsistencyError("dual of a regular coalgebra is not a regular algebra")
    return a


def dualize_bialgebra(b: AlmostBialgebra) -> AlmostBialgebra:
    """Swap the roles of multiplication and comultiplication by transposing."""
    alg = dualize_coalgebra(b.coalgebra)
    coalg = dualize_algebra(b.algebra)
    return AlmostBialgebra(
        alg,
        coalg,
        None if b.counit is None else b.counit.T,
        None if b.unit is None else b.unit.T,
    )


def pairing_identities(a: ObstructedAlgebra, c: ObstructedCoalgebra) -> bool:
    """``<comult(xi), x1 (x) x2> = <xi, m(x1 (x) x2)>`` on all basis elements."""
    d = a.dim
    for k in range(d):
        xi = Matrix.unit(d, k)
        for i in range(d):
            for j in range(d):
                x = Matrix.unit(d, i).kron(Matrix.unit(d, j))
                if (c.comult @ xi).T @ x != xi.T @ (a.mult @ x):
                    return False
    return True


# -- modules and comodules -------------------------------------------------------


def check_regular_module(a: ObstructedAlgebra, m_dim: int, action: Matrix, e_m: Matrix) -> bool:
    """Left module laws ``rho o (m (x) id) = rho o (id (x) rho)`` and
    ``rho o (e_A (x) e_M) = e_M o rho``."""
    if action.shape != (m_dim, a.dim * m_dim):
        raise DimensionMismatch(f"action has shape {action.shape}, expected {(m_dim, a.dim * m_dim)}")
    _check_idempotent(e_m, m_dim, "module obstruction")
    rho, im, ia = action, _eye(m_dim), _eye(a.dim)
    assoc = rho @ a.mult.kron(im) == rho @ ia.kron(rho)
    regular = rho @ a.obstruction.kron(e_m) == e_m @ rho
    return assoc and regular


def check_regular_comodule(c: ObstructedCoalgebra, m_dim: int, coaction: Matrix, e_m: Matrix) -> bool:
    """Comodule laws for ``delta: M -> A (x) M``:
    ``(comult (x) id) o delta = (id (x) delta) o delta`` and
    ``(e_A (x) e_M) o delta = delta o e_M``.

    This is the transpose of the module law, which is what makes module
    actions and comodule coactions dual to one another.
    """
    if coaction.shape != (c.dim * m_dim, m_dim):
        raise DimensionMismatch(f"coaction has shape {coaction.shape}, expected {(c.dim * m_dim, m_dim)}")
    _check_idempotent(e_m, m_dim, "comodule obstruction")
    delta, im, ia = coaction, _eye(m_dim), _eye(c.dim)
    coassoc = c.comult.kron(im) @ delta == ia.kron(delta) @ delta
    regular = c.obstruction.kron(e_m) @ delta == delta @ e_m
    return coassoc and regular


def dual_comodule(a: ObstructedAlgebra, action: Matrix, e_m: Matrix) -> tuple[ObstructedCoalgebra, Matrix, Matrix]:
    """``(A*, rho^T, e_M^T)``: the comodule paired with a module."""
    coalg = ObstructedCoalgebra(a.dim, a.mult.T, a.obstruction.T)
    return coalg, action.T, e_m.T


def dual_module(c: ObstructedCoalgebra, coaction: Matrix, e_m: Matrix) -> tuple[ObstructedAlgebra, Matrix, Matrix]:
    alg = ObstructedAlgebra(c.dim, c.comult.T, c.obstruction.T)
    return alg, coaction.T, e_m.T


# -- standard instances ----------------------------------------------------------


def coordinate_algebra(d: int, obstruction: Matrix | None = None) -> ObstructedAlgebra:
    """Q^d with coordinate-wise product."""
    rows = [[1 if (k == i == j) else 0 for i in range(d) for j in range(d)] for k in range(d)]
    return ObstructedAlgebra(d, Matrix(rows, shape=(d, d * d)), obstruction if obstruction is not None else _eye(d))


def grouplike_coalgebra(d: int, obstruction: Matrix | None = None) -> ObstructedCoalgebra:
    """``b_i -> b_i (x) b_i``."""
    return ObstructedCoalgebra(d, coordinate_algebra(d).mult.T, obstruction if obstruction is not None else _eye(d))


def group_algebra(n: int) -> AlmostBialgebra:
    """The group algebra of Z_n with basis ``g^0 .. g^(n-1)`` and group-like
    comultiplication; obstruction is the identity."""
    mult = [[1 if (i + j) % n == k else 0 for i in range(n) for j in range(n)] for k in range(n)]
    m = Matrix(mult, shape=(n, n * n))
    alg = ObstructedAlgebra(n, m, _eye(n))
    coalg = grouplike_coalgebra(n)
    return AlmostBialgebra(alg, coalg, Matrix.unit(n, 0), Matrix.row([1] * n))


def group_inversion(n: int) -> Matrix:
    """``g^k -> g^(-k)`` on the Z_n group algebra."""
    return Matrix([[1 if (-j) % n == i else 0 for j in range(n)] for i in range(n)], shape=(n, n))
