"""A combinatorial model of interactions and their TQFT-style evaluation.

Boundaries are ordered lists of oriented labels; disjoint union is
concatenation and the empty boundary is allowed.  Cobordism classes are free
generator tags with declared boundaries and declared opposites; cylinders are
tags that normalize away.  An interaction is a boundary-typed word of
generators, gluing is concatenation along an exactly matching boundary.

Evaluation sends a boundary to the Kronecker product of its label spaces (a
reversed orientation keeps the dimension) and a word to the composite of its
generator matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cocycle import CocycleReport, category_from_cycle, verify_cocycle
from .errors import (
    BoundaryMismatch,
    NoOppositeDeclared,
    ShapeMismatch,
    UnassignedGenerator,
    UnassignedLabel,
    UnknownName,
)
from .linalg import Matrix


@dataclass(frozen=True)
class Boundary:
    components: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        comps = tuple((str(lab), int(o)) for lab, o in self.components)
        for lab, o in comps:
            if o not in (1, -1):
                raise BoundaryMismatch(f"orientation of {lab!r} must be +1 or -1, got {o}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *labels: str) -> "Boundary":
        """``Boundary.of("a", "b-")``: a trailing ``-`` marks reversed orientation."""
        return cls(tuple((lab[:-1], -1) if lab.endswith("-") else (lab.rstrip("+"), 1) for lab in labels))

    @property
    def is_empty(self) -> bool:
        return not self.components

    def dual(self) -> "Boundary":
        return Boundary(tuple((lab, -o) for lab, o in self.components))

    def __add__(self, other: "Boundary") -> "Boundary":
        return Boundary(self.components + other.components)

    def __str__(self) -> str:
        if not self.components:
            return "∅"
        return " ⊔ ".join(lab if o == 1 else f"{lab}*" for lab, o in self.components)


EMPTY = Boundary()


@dataclass(frozen=True)
class Generator:
    tag: str
    incoming: Boundary
    outgoing: Boundary
    opposite: str | None = None
    cylinder: bool = False


class Signature:
    """Labels and generator tags with their boundaries and declared opposites."""

    def __init__(self, labels: Iterable[str], generators: Iterable[Generator] = ()):
        self.labels = frozenset(labels)
        self.generators: dict[str, Generator] = {}
        for g in generators:
            if g.tag in self.generators:
                raise UnknownName(f"duplicate generator {g.tag!r}")
            for lab, _ in g.incoming.components + g.outgoing.components:
                if lab not in self.labels:
                    raise UnknownName(f"generator {g.tag!r} uses undeclared label {lab!r}")
            if g.cylinder and g.incoming != g.outgoing:
                raise BoundaryMismatch(f"cylinder {g.tag!r} must have equal boundaries")
            self.generators[g.tag] = g
        for g in self.generators.values():
            if g.opposite is None:
                continue
            h = self.generators.get(g.opposite)
            if h is None:
                raise UnknownName(f"opposite {g.opposite!r} of {g.tag!r} is not declared")
            if h.opposite != g.tag or h.incoming != g.outgoing or h.outgoing != g.incoming:
                raise BoundaryMismatch(f"{g.tag!r} and {h.tag!r} are not mutually opposite")

    def generator(self, tag: str) -> Generator:
        try:
            return self.generators[tag]
        except KeyError:
            raise UnknownName(f"unknown generator {tag!r}") from None

    def check_boundary(self, b: Boundary) -> None:
        for lab, _ in b.components:
            if lab not in self.labels:
                raise UnknownName(f"undeclared label {lab!r}")

    def interaction(self, word: Sequence[str], incoming: Boundary | None = None,
                    outgoing: Boundary | None = None) -> "Interaction":
        """Validate a word and wrap it as an interaction.

        Boundaries default to those of the first and last non-cylinder
        generator; an empty word needs ``incoming`` (``outgoing`` defaults to
        it).
        """
        gens = [self.generator(t) for t in word]
        if incoming is None:
            if not gens:
                raise BoundaryMismatch("an empty word needs an explicit boundary")
            incoming = gens[0].incoming
        self.check_boundary(incoming)
        current = incoming
        for g in gens:
            if g.incoming != current:
                raise BoundaryMismatch(_mismatch(current, g.incoming, f"entering {g.tag!r}"))
            current = g.outgoing
        if outgoing is None:
            outgoing = current
        elif outgoing != current:
            raise BoundaryMismatch(_mismatch(current, outgoing, "at the outgoing end"))
        body = tuple(g.tag for g in gens if not g.cylinder)
        return Interaction(incoming, outgoing, body, self)

    def cylinder(self, b: Boundary) -> "Interaction":
        self.check_boundary(b)
        return Interaction(b, b, (), self)


def _mismatch(have: Boundary, want: Boundary, where: str) -> str:
    a, b = have.components, want.components
    for k in range(max(len(a), len(b))):
        x = a[k] if k < len(a) else None
        y = b[k] if k < len(b) else None
        if x != y:
            return f"boundary mismatch {where}: component {k} is {x} but {y} is required"
    return f"boundary mismatch {where}"


@dataclass(frozen=True)
class Interaction:
    incoming: Boundary
    outgoing: Boundary
    body: tuple[str, ...]
    signature: Signature = field(repr=False, compare=False, hash=False)

    @property
    def is_closed(self) -> bool:
        return self.incoming.is_empty and self.outgoing.is_empty

    def __str__(self) -> str:
        word = " ".join(self.body) if self.body else "id"
        return f"[{self.incoming}] {word} [{self.outgoing}]"


def glue(m1: Interaction, m2: Interaction) -> Interaction:
    """Glue ``m1`` then ``m2`` along ``m1.outgoing == m2.incoming``."""
    if m1.outgoing != m2.incoming:
        raise BoundaryMismatch(_mismatch(m1.outgoing, m2.incoming, "at the gluing boundary"))
    return Interaction(m1.incoming, m2.outgoing, m1.body + m2.body, m1.signature)


def opposite(m: Interaction) -> Interaction:
    sig = m.signature
    body = []
    for tag in reversed(m.body):
        op = sig.generator(tag).opposite
        if op is None:
            raise NoOppositeDeclared(f"generator {tag!r} has no declared opposite")
        body.append(op)
    return Interaction(m.outgoing, m.incoming, tuple(body), sig)


@dataclass(frozen=True)
class TqftAssignment:
    signature: Signature = field(repr=False)
    label_dims: Mapping[str, int]
    generator_maps: Mapping[str, Matrix]

    def __post_init__(self):
        for tag, mat in self.generator_maps.items():
            g = self.signature.generator(tag)
            want = (self._dim(g.outgoing, strict=False), self._dim(g.incoming, strict=False))
            if None not in want and mat.shape != want:
                raise ShapeMismatch(f"generator {tag!r} has shape {mat.shape}, boundaries need {want}")

    def _dim(self, b: Boundary, strict: bool = True) -> int | None:
        d = 1
        for lab, _ in b.components:
            if lab not in self.label_dims:
                if strict:
                    raise UnassignedLabel(f"label {lab!r} has no assigned space")
                return None
            d *= self.label_dims[lab]
        return d

    def boundary_dim(self, b: Boundary) -> int:
        return self._dim(b)

    def generator_map(self, tag: str) -> Matrix:
        g = self.signature.generator(tag)
        if g.cylinder:
            return Matrix.identity(self.boundary_dim(g.incoming))
        try:
            return self.generator_maps[tag]
        except KeyError:
            raise UnassignedGenerator(f"generator {tag!r} has no assigned map") from None


def evaluate(F: TqftAssignment, m: Interaction) -> Matrix:
    out = Matrix.identity(F.boundary_dim(m.incoming))
    F.boundary_dim(m.outgoing)  # unassigned labels raise here
    for tag in m.body:
        out = F.generator_map(tag) @ out
    return out


def check_n_regular_tqft(F: TqftAssignment, interactions: Sequence[Interaction]) -> CocycleReport:
    """Evaluate a cyclic sequence of interactions and check the resulting
    cocycle.  Objects are named by their boundaries."""
    n = len(interactions)
    if n == 0:
        raise BoundaryMismatch("empty cycle")
    for i, m in enumerate(interactions):
        nxt = interactions[(i + 1) % n]
        if m.outgoing != nxt.incoming:
            raise BoundaryMismatch(_mismatch(m.outgoing, nxt.incoming, f"between interactions {i + 1} and {(i + 1) % n + 1}"))
    maps = [evaluate(F, m) for m in interactions]
    objects = [str(m.incoming) for m in interactions]
    arrows = [f"M{i + 1}" for i in range(n)]
    _, c = category_from_cycle(maps, objects, arrows)
    return verify_cocycle(c)
