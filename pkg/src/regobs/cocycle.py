"""Represented categories, n-regular cocycles and obstruction structures.

A ``RepresentedCategory`` is a finite directed graph whose objects carry a
dimension and whose arrows carry a rational matrix; composition is matrix
product.  A cocycle is a closed path of arrows ``X_1 -f_1-> X_2 -> ... -f_n->
X_1``.  It is n-regular when, for each ``i``, going once around the cycle
starting at ``X_i`` and then applying ``f_i`` reproduces ``f_i``.  The loop
composites ``e_{X_i}`` are then idempotent and form the obstruction
structure; they are identities exactly when the cycle is invertible.

Cocycle positions are reported 1-based, matching the arrow labels f_1..f_n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .chains import StarChain
from .errors import (
    DimensionMismatch,
    InternalConsistencyError,
    LengthMismatch,
    NotRegular,
    ObjectNotOnCocycle,
    RetractionFailure,
    SmallCycleNotTrivial,
    UnknownName,
)
from .linalg import Matrix, compose, witness_vector


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    matrix: Matrix


class RepresentedCategory:
    """Objects with dimensions, arrows with matrices.  Immutable."""

    def __init__(self, objects: Iterable[tuple[str, int]] | Mapping[str, int], arrows: Iterable = ()):
        pairs = list(objects.items()) if isinstance(objects, Mapping) else list(objects)
        self._objects: dict[str, int] = {}
        for name, dim in pairs:
            if name in self._objects:
                raise UnknownName(f"duplicate object name {name!r}")
            if dim < 0:
                raise DimensionMismatch(f"object {name!r} has negative dimension")
            self._objects[name] = int(dim)
        self._arrows: dict[str, Arrow] = {}
        for a in arrows:
            a = a if isinstance(a, Arrow) else Arrow(*a)
            if a.name in self._arrows:
                raise UnknownName(f"duplicate arrow name {a.name!r}")
            for end in (a.source, a.target):
                if end not in self._objects:
                    raise UnknownName(f"arrow {a.name!r} refers to unknown object {end!r}")
            want = (self._objects[a.target], self._objects[a.source])
            if a.matrix.shape != want:
                raise DimensionMismatch(f"arrow {a.name!r} has shape {a.matrix.shape}, endpoints need {want}")
            self._arrows[a.name] = a

    @property
    def objects(self) -> dict[str, int]:
        return dict(self._objects)

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return tuple(self._arrows.values())

    def dim(self, obj: str) -> int:
        try:
            return self._objects[obj]
        except KeyError:
            raise UnknownName(f"unknown object {obj!r}") from None

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows[name]
        except KeyError:
            raise UnknownName(f"unknown arrow {name!r}") from None

    def find_arrow(self, source: str, target: str, matrix: Matrix) -> Arrow | None:
        for a in self._arrows.values():
            if a.source == source and a.target == target and a.matrix == matrix:
                return a
        return None

    def cocycle(self, *arrow_names: str) -> "Cocycle":
        """The closed path through the named arrows; objects are inferred."""
        if len(arrow_names) == 1 and not isinstance(arrow_names[0], str):
            arrow_names = tuple(arrow_names[0])
        objs = tuple(self.arrow(a).source for a in arrow_names)
        return Cocycle(self, objs, tuple(arrow_names))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepresentedCategory):
            return NotImplemented
        return self._objects == other._objects and self._arrows == other._arrows

    def __repr__(self) -> str:
        return f"RepresentedCategory({len(self._objects)} objects, {len(self._arrows)} arrows)"


def category_from_cycle(maps: Sequence[Matrix], objects: Sequence[str] | None = None,
                        arrows: Sequence[str] | None = None) -> tuple[RepresentedCategory, "Cocycle"]:
    """A category holding exactly one closed path ``X1 -f1-> X2 ... -fn-> X1``.

    Repeated object or arrow names are merged when their data agree.
    """
    n = len(maps)
    if n == 0:
        raise LengthMismatch("a cocycle needs at least one arrow")
    objects = list(objects) if objects is not None else [f"X{i + 1}" for i in range(n)]
    arrows = list(arrows) if arrows is not None else [f"f{i + 1}" for i in range(n)]
    if len(objects) != n or len(arrows) != n:
        raise LengthMismatch("names and maps have different lengths")
    dims: dict[str, int] = {}
    for i, m in enumerate(maps):
        for name, d in ((objects[i], m.ncols), (objects[(i + 1) % n], m.nrows)):
            if dims.setdefault(name, d) != d:
                raise DimensionMismatch(f"object {name!r} would need dimensions {dims[name]} and {d}")
    arrow_list: dict[str, Arrow] = {}
    for i, m in enumerate(maps):
        a = Arrow(arrows[i], objects[i], objects[(i + 1) % n], m)
        if arrow_list.setdefault(a.name, a) != a:
            raise DimensionMismatch(f"arrow name {a.name!r} reused for different data")
    cat = RepresentedCategory(list(dims.items()), list(arrow_list.values()))
    return cat, Cocycle(cat, tuple(objects), tuple(arrows))


@dataclass(frozen=True)
class Cocycle:
    category: RepresentedCategory = field(repr=False)
    objects: tuple[str, ...]
    arrows: tuple[str, ...]

    def __post_init__(self):
        n = len(self.arrows)
        if n < 1 or len(self.objects) != n:
            raise LengthMismatch("a cocycle needs n >= 1 arrows and as many objects")
        for i, name in enumerate(self.arrows):
            a = self.category.arrow(name)
            nxt = self.objects[(i + 1) % n]
            if a.source != self.objects[i] or a.target != nxt:
                raise DimensionMismatch(
                    f"arrow {name!r} goes {a.source}->{a.target}, cycle needs {self.objects[i]}->{nxt}"
                )

    @property
    def n(self) -> int:
        return len(self.arrows)

    @property
    def maps(self) -> tuple[Matrix, ...]:
        return tuple(self.category.arrow(a).matrix for a in self.arrows)

    def loop_at(self, i: int) -> Matrix:
        """``e_{X_i}``: once around the cycle starting at position ``i`` (0-based)."""
        maps, n = self.maps, self.n
        return compose(*(maps[(i + k) % n] for k in reversed(range(n))))

    def same_data(self, other: "Cocycle") -> bool:
        return self.objects == other.objects and self.arrows == other.arrows and self.maps == other.maps


@dataclass(frozen=True)
class ObstructionStructure:
    objects: tuple[str, ...]
    endomaps: tuple[Matrix, ...]

    def __post_init__(self):
        for obj, e in zip(self.objects, self.endomaps):
            if not e.is_square():
                raise DimensionMismatch(f"obstruction at {obj!r} is not an endomap")

    def __getitem__(self, i: int) -> Matrix:
        return self.endomaps[i]

    def __len__(self) -> int:
        return len(self.endomaps)

    def at(self, obj: str) -> Matrix:
        for o, e in zip(self.objects, self.endomaps):
            if o == obj:
                return e
        raise ObjectNotOnCocycle(f"{obj!r} is not on the cocycle")

    @property
    def trivial(self) -> bool:
        return all(e.is_identity() for e in self.endomaps)


@dataclass(frozen=True)
class CocycleReport:
    cocycle: Cocycle
    regular: bool
    obstruction: ObstructionStructure | None = None
    failing_index: int | None = None
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.regular

    @property
    def trivial(self) -> bool:
        return self.regular and self.obstruction.trivial


def obstruction_relations(c: Cocycle, ob: ObstructionStructure) -> list[tuple[bool, bool, bool]]:
    """Per position: ``f_i e_i = f_i``, ``e_{i+1} f_i = f_i``, ``e_i e_i = e_i``."""
    maps, n = c.maps, c.n
    out = []
    for i, f in enumerate(maps):
        e, e_next = ob[i], ob[(i + 1) % n]
        out.append((f @ e == f, e_next @ f == f, e @ e == e))
    return out


def verify_cocycle(c: Cocycle) -> CocycleReport:
    maps = c.maps
    for i, f in enumerate(maps):
        lhs = f @ c.loop_at(i)
        if lhs != f:
            return CocycleReport(c, False, failing_index=i + 1, witness=witness_vector(lhs, f))
    ob = ObstructionStructure(c.objects, tuple(c.loop_at(i) for i in range(c.n)))
    if not all(all(r) for r in obstruction_relations(c, ob)):
        raise InternalConsistencyError("obstruction relations failed on a regular cocycle")
    return CocycleReport(c, True, ob)


def require_regular(c: Cocycle) -> ObstructionStructure:
    report = verify_cocycle(c)
    if not report:
        raise NotRegular(f"cocycle identity for f_{report.failing_index} fails", report.failing_index, report.witness)
    return report.obstruction


def obstruction_degree(cocycles: Sequence[Cocycle], obj: str) -> int | str:
    """Smallest length among the given cocycles whose obstruction at ``obj``
    is not the identity; ``"trivial"`` if there is none.

    Only the supplied cocycles are considered.
    """
    best = None
    for c in cocycles:
        ob = require_regular(c)
        if obj not in c.objects:
            raise ObjectNotOnCocycle(f"{obj!r} is not on cocycle {c.arrows}")
        nontrivial = any(not e.is_identity() for o, e in zip(ob.objects, ob.endomaps) if o == obj)
        if nontrivial and (best is None or c.n < best):
            best = c.n
    return "trivial" if best is None else best


# -- lift construction ---------------------------------------------------------


@dataclass(frozen=True)
class LiftData:
    """Retractions ``Y_i -iota_i-> X_i -pi_i-> Y_i`` and a cycle on the ``Y_i``.

    ``small_maps[i]`` goes ``Y_i -> Y_{i+1}``.  The small cycle must compose
    to the identity from every starting point.
    """

    inclusions: tuple[Matrix, ...]
    projections: tuple[Matrix, ...]
    small_maps: tuple[Matrix, ...]

    def __post_init__(self):
        for name in ("inclusions", "projections", "small_maps"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        n = len(self.small_maps)
        if n < 1 or len(self.inclusions) != n or len(self.projections) != n:
            raise LengthMismatch("inclusions, projections and small maps need equal nonzero length")
        for i in range(n):
            iota, pi = self.inclusions[i], self.projections[i]
            if pi.shape != (iota.ncols, iota.nrows):
                raise DimensionMismatch(f"projection {i + 1} has shape {pi.shape}, inclusion {iota.shape}")
            want = (self.small_dims[(i + 1) % n], self.small_dims[i])
            if self.small_maps[i].shape != want:
                raise DimensionMismatch(f"small map {i + 1} has shape {self.small_maps[i].shape}, expected {want}")

    @property
    def n(self) -> int:
        return len(self.small_maps)

    @property
    def big_dims(self) -> tuple[int, ...]:
        return tuple(m.nrows for m in self.inclusions)

    @property
    def small_dims(self) -> tuple[int, ...]:
        return tuple(m.ncols for m in self.inclusions)

    def validate(self) -> None:
        n = self.n
        for i in range(n):
            if not (self.projections[i] @ self.inclusions[i]).is_identity():
                raise RetractionFailure(f"pi_{i + 1} o iota_{i + 1} is not the identity", i + 1)
        for i in range(n):
            loop = compose(*(self.small_maps[(i + k) % n] for k in reversed(range(n))))
            if not loop.is_identity():
                raise SmallCycleNotTrivial(f"small cycle starting at Y_{i + 1} is not the identity", i + 1)


def lift_construct(data: LiftData) -> tuple[RepresentedCategory, Cocycle, ObstructionStructure]:
    """Build ``f_i = iota_{i+1} o small_i o pi_i``; the obstruction at ``X_i``
    is ``iota_i o pi_i``."""
    data.validate()
    n = data.n
    maps = [data.inclusions[(i + 1) % n] @ data.small_maps[i] @ data.projections[i] for i in range(n)]
    cat, c = category_from_cycle(maps)
    ob = require_regular(c)
    for i in range(n):
        if ob[i] != data.inclusions[i] @ data.projections[i]:
            raise InternalConsistencyError(f"obstruction at X_{i + 1} differs from iota o pi")
    return cat, c, ob


def lift_star_chain(data: LiftData) -> StarChain:
    """Read an even lift cocycle on alternating spaces ``X, Y, X, Y, ...`` as
    the star chain ``[f_1, f_n, f_{n-1}, ..., f_2]``."""
    _, c, _ = lift_construct(data)
    return chain_from_cocycle(c)


def chain_from_cocycle(c: Cocycle) -> StarChain:
    maps = c.maps
    return StarChain((maps[0],) + tuple(reversed(maps[1:])))


# -- morphisms -------------------------------------------------------------------


class MorphismKind(str, enum.Enum):
    NOT_A_MORPHISM = "not_a_morphism"
    MORPHISM = "morphism"
    EQUIVALENCE = "equivalence"


def cocycle_morphism_check(c1: Cocycle, c2: Cocycle, alphas: Sequence[Matrix]) -> MorphismKind:
    """Classify a ladder ``alpha_i: X_i -> Y_i`` between two regular cocycles."""
    require_regular(c1)
    require_regular(c2)
    n = c1.n
    if c2.n != n or len(alphas) != n:
        raise LengthMismatch("cocycles and ladder must have equal length")
    for i, a in enumerate(alphas):
        want = (c2.category.dim(c2.objects[i]), c1.category.dim(c1.objects[i]))
        if a.shape != want:
            raise DimensionMismatch(f"alpha_{i + 1} has shape {a.shape}, expected {want}")
    f, g = c1.maps, c2.maps
    for i in range(n):
        if alphas[(i + 1) % n] @ f[i] != g[i] @ alphas[i]:
            return MorphismKind.NOT_A_MORPHISM
    if all(a.is_invertible() for a in alphas):
        return MorphismKind.EQUIVALENCE
    return MorphismKind.MORPHISM


def invert_ladder(alphas: Sequence[Matrix]) -> tuple[Matrix, ...]:
    return tuple(a.inverse() for a in alphas)


def compose_ladders(second: Sequence[Matrix], first: Sequence[Matrix]) -> tuple[Matrix, ...]:
    """Component-wise ``second_i o first_i``."""
    if len(first) != len(second):
        raise LengthMismatch("ladders of different length")
    return tuple(b @ a for a, b in zip(first, second))


def conjugate_cocycle(c: Cocycle, alphas: Sequence[Matrix], suffix: str = "'") -> Cocycle:
    """Transport ``c`` along invertible ``alphas``: ``g_i = a_{i+1} f_i a_i^-1``.

    The result lives in a fresh category; names get ``suffix`` appended.
    """
    n = c.n
    if len(alphas) != n:
        raise LengthMismatch("ladder length differs from cocycle length")
    inv = invert_ladder(alphas)
    maps = [alphas[(i + 1) % n] @ f @ inv[i] for i, f in enumerate(c.maps)]
    _, out = category_from_cycle(maps, [o + suffix for o in c.objects], [a + suffix for a in c.arrows])
    return out
