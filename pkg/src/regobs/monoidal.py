"""Tensor products, duals and pairings of cocycles; functors between
represented categories.

Conventions: the tensor product is the Kronecker product (basis
``b_i (x) b'_j`` at index ``i * dim' + j``), the unit object is Q^1, the dual
of a coordinate space is the same coordinate space and the dual of a map is
its transpose.  Dual names append ``*`` (and strip a trailing one), so the
double dual is literally the original cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cocycle import (
    Cocycle,
    RepresentedCategory,
    category_from_cycle,
    require_regular,
    verify_cocycle,
)
from .errors import (
    DimensionMismatch,
    ImageNotACocycle,
    InternalConsistencyError,
    LengthMismatch,
    UnknownName,
)
from .linalg import Matrix


def dual_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def tensor_cocycles(c1: Cocycle, c2: Cocycle) -> Cocycle:
    """Position-wise tensor product; its obstruction is the Kronecker product
    of the two input obstructions."""
    e1, e2 = require_regular(c1), require_regular(c2)
    if c1.n != c2.n:
        raise LengthMismatch(f"cocycle lengths {c1.n} and {c2.n} differ")
    maps = [f.kron(g) for f, g in zip(c1.maps, c2.maps)]
    objects = [f"{x}⊗{y}" for x, y in zip(c1.objects, c2.objects)]
    arrows = [f"{f}⊗{g}" for f, g in zip(c1.arrows, c2.arrows)]
    _, out = category_from_cycle(maps, objects, arrows)
    ob = require_regular(out)
    for i in range(out.n):
        if ob[i] != e1[i].kron(e2[i]):
            raise InternalConsistencyError(f"tensor obstruction at position {i + 1} is not e (x) e'")
    return out


def dual_cocycle(c: Cocycle) -> Cocycle:
    """Reverse every arrow and dualize every object.

    The dual runs ``X1* -fn*-> Xn* -> ... -> X2* -f1*-> X1*``; its obstruction
    at ``Xi*`` is the transpose of the obstruction at ``Xi``.
    """
    ob = require_regular(c)
    n = c.n
    order = [0] + list(range(n - 1, 0, -1))
    objects = [dual_name(c.objects[i]) for i in order]
    arrow_order = list(range(n - 1, -1, -1))
    arrows = [dual_name(c.arrows[i]) for i in arrow_order]
    maps = [c.maps[i].T for i in arrow_order]
    _, out = category_from_cycle(maps, objects, arrows)
    dual_ob = require_regular(out)
    for k, i in enumerate(order):
        if dual_ob[k] != ob[i].T:
            raise InternalConsistencyError(f"dual obstruction at {objects[k]} is not a transpose")
    return out


def evaluation_pairing(d: int) -> Matrix:
    """``<xi | x> = sum_k xi_k x_k`` as a ``1 x d^2`` map on ``X* (x) X``."""
    return Matrix.row([1 if i == j else 0 for i in range(d) for j in range(d)])


@dataclass(frozen=True)
class PairingReport:
    adjunction: tuple[bool, ...]  # <f_i* xi, x> = <xi, f_i x>, per arrow
    obstruction_symmetry: tuple[bool, ...]  # <e* xi, x> = <xi, e x>, per object

    @property
    def holds(self) -> bool:
        return all(self.adjunction) and all(self.obstruction_symmetry)

    def __bool__(self) -> bool:
        return self.holds


def pairing_report(c: Cocycle) -> PairingReport:
    """Check the evaluation pairing against the cocycle and its dual.

    For ``f_i: X_i -> X_{i+1}`` with dual ``f_i*: X_{i+1}* -> X_i*`` the first
    family is ``g_{X_i} o (f_i* (x) id) = g_{X_{i+1}} o (id (x) f_i)`` on
    ``X_{i+1}* (x) X_i``; the second is ``g o (e* (x) id) = g o (id (x) e)``
    at every object.
    """
    ob = require_regular(c)
    d = dual_cocycle(c)
    dual_ob = require_regular(d)
    dims = [c.category.dim(o) for o in c.objects]
    n = c.n
    adj = []
    for i, f in enumerate(c.maps):
        di, dj = dims[i], dims[(i + 1) % n]
        f_star = d.maps[n - 1 - i]
        lhs = evaluation_pairing(di) @ f_star.kron(Matrix.identity(di))
        rhs = evaluation_pairing(dj) @ Matrix.identity(dj).kron(f)
        adj.append(lhs == rhs)
    sym = []
    for i in range(n):
        di = dims[i]
        # original position i sits at dual position (n - i) mod n
        e, e_star = ob[i], dual_ob[(n - i) % n]
        g = evaluation_pairing(di)
        sym.append(g @ e_star.kron(Matrix.identity(di)) == g @ Matrix.identity(di).kron(e))
    return PairingReport(tuple(adj), tuple(sym))


def pairing_check(c: Cocycle) -> bool:
    return pairing_report(c).holds


# -- functors ----------------------------------------------------------------------


@dataclass(frozen=True)
class FunctorData:
    """Object and arrow assignments between two represented categories.

    ``transports`` optionally gives, per source object ``X``, an invertible
    ``T_X: X -> F(X)`` used to carry endomaps of ``X`` over to ``F(X)`` as
    ``T_X e T_X^-1``.  Missing entries default to the identity (which then
    requires ``dim F(X) = dim X``).
    """

    object_map: Mapping[str, str]
    arrow_map: Mapping[str, str]
    transports: Mapping[str, Matrix] = field(default_factory=dict)

    def transport(self, src: RepresentedCategory, dst: RepresentedCategory, obj: str) -> Matrix:
        if obj in self.transports:
            t = self.transports[obj]
        else:
            t = Matrix.identity(src.dim(obj))
        want = (dst.dim(self.obj(obj)), src.dim(obj))
        if t.shape != want:
            raise DimensionMismatch(f"transport at {obj!r} has shape {t.shape}, expected {want}")
        return t

    def obj(self, name: str) -> str:
        try:
            return self.object_map[name]
        except KeyError:
            raise UnknownName(f"functor does not map object {name!r}") from None

    def arr(self, name: str) -> str:
        try:
            return self.arrow_map[name]
        except KeyError:
            raise UnknownName(f"functor does not map arrow {name!r}") from None

    def then(self, other: "FunctorData") -> "FunctorData":
        """The composite ``other o self``."""
        objects = {x: other.obj(y) for x, y in self.object_map.items()}
        arrows = {a: other.arr(b) for a, b in self.arrow_map.items()}
        transports = {}
        for x, y in self.object_map.items():
            if x in self.transports or y in other.transports:
                t1 = self.transports.get(x)
                t2 = other.transports.get(y)
                if t1 is None:
                    transports[x] = t2
                elif t2 is None:
                    transports[x] = t1
                else:
                    transports[x] = t2 @ t1
        return FunctorData(objects, arrows, transports)


def identity_functor(cat: RepresentedCategory) -> FunctorData:
    return FunctorData({o: o for o in cat.objects}, {a.name: a.name for a in cat.arrows})


def image_cocycle(dst: RepresentedCategory, F: FunctorData, c: Cocycle) -> Cocycle:
    objects = tuple(F.obj(o) for o in c.objects)
    arrows = tuple(F.arr(a) for a in c.arrows)
    try:
        return Cocycle(dst, objects, arrows)
    except (DimensionMismatch, UnknownName) as exc:
        raise ImageNotACocycle(f"image of {c.arrows} is not a closed path: {exc}") from exc


@dataclass(frozen=True)
class FunctorReport:
    composition: bool
    obstruction: bool
    absorption: bool
    failures: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.composition and self.obstruction and self.absorption

    def __bool__(self) -> bool:
        return self.holds


def functor_report(src: RepresentedCategory, dst: RepresentedCategory, F: FunctorData,
                   cocycles: Sequence[Cocycle]) -> FunctorReport:
    """Check a functor on the supplied cocycles.

    (a) whenever two consecutive cocycle arrows compose to a named arrow
    ``h`` of ``src``, ``F(h)`` is the composite of the images;
    (b) the image of each cocycle is regular and its obstruction at ``F(X_i)``
    equals the transported obstruction ``T e_{X_i} T^-1``;
    (c) ``F(f_i) o e_{F X_i} = F(f_i)``.
    """
    comp = obst = absorb = True
    failures = []
    for c in cocycles:
        if c.category is not src and c.category != src:
            raise UnknownName("cocycle does not live in the source category")
        ob = require_regular(c)
        img = image_cocycle(dst, F, c)
        n = c.n
        for i in range(n):
            f, g = c.category.arrow(c.arrows[i]), c.category.arrow(c.arrows[(i + 1) % n])
            h = src.find_arrow(f.source, g.target, g.matrix @ f.matrix)
            if h is not None:
                fh = dst.arrow(F.arr(h.name)).matrix
                if fh != dst.arrow(F.arr(g.name)).matrix @ dst.arrow(F.arr(f.name)).matrix:
                    comp = False
                    failures.append(f"F({h.name}) != F({g.name}) o F({f.name})")
        report = verify_cocycle(img)
        if not report:
            obst = absorb = False
            failures.append(f"image of {c.arrows} is not regular (f_{report.failing_index})")
            continue
        for i, obj in enumerate(c.objects):
            t = F.transport(src, dst, obj)
            if not t.is_invertible():
                raise DimensionMismatch(f"transport at {obj!r} is not invertible")
            if t @ ob[i] @ t.inverse() != report.obstruction[i]:
                obst = False
                failures.append(f"F(e_{obj}) != e_{F.obj(obj)}")
        for i, fi in enumerate(img.maps):
            if fi @ report.obstruction[i] != fi:
                absorb = False
                failures.append(f"F(f_{i + 1}) o e != F(f_{i + 1})")
    return FunctorReport(comp, obst, absorb, tuple(failures))


def functor_check(src: RepresentedCategory, dst: RepresentedCategory, F: FunctorData,
                  cocycles: Sequence[Cocycle]) -> bool:
    return functor_report(src, dst, F, cocycles).holds


@dataclass(frozen=True)
class NaturalityVerdict:
    holds: bool
    failing_square: tuple[int, int] | None = None  # (cocycle index, 1-based arrow index)

    def __bool__(self) -> bool:
        return self.holds


def natural_transformation_check(dst: RepresentedCategory, F: FunctorData, G: FunctorData,
                                 components: Mapping[str, Matrix],
                                 cocycles: Sequence[Cocycle]) -> NaturalityVerdict:
    """``s_{X_{i+1}} o F(f_i) = G(f_i) o s_{X_i}`` on every cocycle arrow.

    ``components`` is keyed by source object name; ``s_X: F(X) -> G(X)``.
    """
    for k, c in enumerate(cocycles):
        n = c.n
        for i, name in enumerate(c.arrows):
            x, y = c.objects[i], c.objects[(i + 1) % n]
            try:
                s_x, s_y = components[x], components[y]
            except KeyError as exc:
                raise UnknownName(f"no component at object {exc.args[0]!r}") from None
            for obj, s, dom, cod in ((x, s_x, F.obj(x), G.obj(x)), (y, s_y, F.obj(y), G.obj(y))):
                want = (dst.dim(cod), dst.dim(dom))
                if s.shape != want:
                    raise DimensionMismatch(f"component at {obj!r} has shape {s.shape}, expected {want}")
            f_img = dst.arrow(F.arr(name)).matrix
            g_img = dst.arrow(G.arr(name)).matrix
            if s_y @ f_img != g_img @ s_x:
                return NaturalityVerdict(False, (k, i + 1))
    return NaturalityVerdict(True)
