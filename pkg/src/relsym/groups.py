"""Permutations and finite permutation groups at desk scale.

A permutation of {1..m} is stored as a tuple ``p`` of 0-indexed images:
``p[i]`` is the image of point i.  Groups are given by generators and closed
by breadth-first products; every group here is small enough to hold its full
element list, which later operations (classes, stabilizers, symmetrizing)
iterate directly.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from . import config
from .errors import ResourceLimitError
from .partitions import ExponentVector, Partition

Permutation = tuple[int, ...]


def identity_permutation(m: int) -> Permutation:
    return tuple(range(m))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def cycle_type(p: Permutation) -> Partition:
    """Cycle lengths of ``p``, sorted descending (fixed points included)."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def permutation_of_cycle_type(lam: Sequence[int]) -> Permutation:
    """A canonical permutation with the given cycle type: consecutive cycles
    on 0..m-1, longest first."""
    m = sum(lam)
    images = list(range(m))
    start = 0
    for length in lam:
        for offset in range(length):
            images[start + offset] = start + (offset + 1) % length
        start += length
    return tuple(images)


def apply_to_exponents(p: Permutation, alpha: Sequence[int]) -> ExponentVector:
    """The coordinate-permutation action on exponent vectors: entry i of the
    result is entry p[i] of the input."""
    return tuple(alpha[i] for i in p)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, m: int) -> Permutation:
    """Parse cycle notation like ``"(1 2)(3 4)"`` into a permutation of m
    points.  ``"()"`` is the identity; points are 1-indexed."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation string")
    consumed = "".join(_CYCLE_RE.findall(stripped))
    if re.sub(r"[()\s]", "", stripped) != re.sub(r"\s", "", consumed):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(m))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        points = [int(tok) for tok in body.split()]
        if not points:
            continue
        for x in points:
            if not 1 <= x <= m:
                raise ValueError(f"point {x} out of range 1..{m} in {text!r}")
            if x in used:
                raise ValueError(f"point {x} repeated in {text!r}")
            used.add(x)
        for i, x in enumerate(points):
            images[x - 1] = points[(i + 1) % len(points)] - 1
    return tuple(images)


def parse_generators(text: str, m: int) -> list[Permutation]:
    """Parse a comma-separated list of permutations in cycle notation."""
    parts = [piece for piece in text.split(",") if piece.strip()]
    if not parts:
        raise ValueError("no generators given")
    return [parse_permutation(piece, m) for piece in parts]


def format_permutation(p: Permutation) -> str:
    """Canonical cycle notation: cycles sorted by smallest point, fixed
    points omitted, identity rendered ``"()"``."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i + 1)
            i = p[i]
        cycles.append(cycle)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


class PermutationGroup:
    """A permutation group given by generators, with its full element list.

    Elements are enumerated once on construction (breadth-first closure,
    then sorted for a deterministic order) and treated as immutable
    afterwards.
    """

    def __init__(
        self,
        generators: Iterable[Permutation],
        m: int,
        max_order: int | None = None,
    ) -> None:
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(m)):
                raise ValueError(f"not a permutation of {m} points: {g}")
        cap = config.MAX_GROUP_ORDER if max_order is None else max_order
        identity = identity_permutation(m)
        elements = {identity}
        frontier = [identity]
        while frontier:
            new_frontier = []
            for g in gens:
                for h in frontier:
                    prod = compose(g, h)
                    if prod not in elements:
                        elements.add(prod)
                        new_frontier.append(prod)
                        if len(elements) > cap:
                            raise ResourceLimitError(
                                f"group order exceeds the cap of {cap}"
                            )
            frontier = new_frontier
        self.m = m
        self.generators = tuple(gens)
        self.elements = tuple(sorted(elements))
        self.order = len(self.elements)
        self._element_set = elements

    @classmethod
    def symmetric(cls, m: int) -> "PermutationGroup":
        if m < 1:
            raise ValueError("degree must be at least 1")
        if m == 1:
            return cls([identity_permutation(1)], 1)
        gens = [parse_permutation("(1 2)", m)]
        if m > 2:
            gens.append(tuple((i + 1) % m for i in range(m)))
        return cls(gens, m)

    def __contains__(self, p: Permutation) -> bool:
        return tuple(p) in self._element_set

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        gens = ", ".join(format_permutation(g) for g in self.generators)
        return f"PermutationGroup(order={self.order}, m={self.m}, generators=[{gens}])"

    def conjugacy_classes(self) -> list[tuple[Permutation, ...]]:
        """Conjugacy classes as sorted tuples, the identity class first,
        remaining classes in order of their smallest element."""
        remaining = set(self.elements)
        classes = []
        for x in self.elements:
            if x not in remaining:
                continue
            orbit = {compose(compose(g, x), inverse(g)) for g in self.elements}
            remaining -= orbit
            classes.append(tuple(sorted(orbit)))
        identity = identity_permutation(self.m)
        classes.sort(key=lambda cls: (cls[0] != identity, cls[0]))
        return classes

    def stabilizer(self, alpha: Sequence[int]) -> "PermutationGroup":
        """The subgroup fixing the exponent vector ``alpha`` under the
        coordinate-permutation action."""
        if len(alpha) != self.m:
            raise ValueError(f"expected {self.m} entries, got {len(alpha)}")
        alpha = tuple(alpha)
        fixed = [g for g in self.elements if apply_to_exponents(g, alpha) == alpha]
        return PermutationGroup(fixed, self.m)

    def orbit(self, alpha: Sequence[int]) -> set[ExponentVector]:
        alpha = tuple(alpha)
        return {apply_to_exponents(g, alpha) for g in self.elements}

    def subgroups(self) -> list["PermutationGroup"]:
        """Every subgroup, by repeatedly closing known subgroups extended by
        one element.  Deterministic order: by order, then element lists."""
        identity = identity_permutation(self.m)
        found: set[frozenset[Permutation]] = {frozenset([identity])}
        frontier = [frozenset([identity])]
        while frontier:
            new_frontier = []
            for sub in frontier:
                for g in self.elements:
                    if g in sub:
                        continue
                    closure = PermutationGroup(list(sub) + [g], self.m)
                    key = frozenset(closure.elements)
                    if key not in found:
                        found.add(key)
                        new_frontier.append(key)
            frontier = new_frontier
        groups = [PermutationGroup(sorted(sub), self.m) for sub in found]
        groups.sort(key=lambda grp: (grp.order, grp.elements))
        return groups


def enumerate_group(
    generators: Iterable[Permutation], m: int, max_order: int | None = None
) -> PermutationGroup:
    """Close a generator list into a full group; capped by ``max_order``."""
    return PermutationGroup(generators, m, max_order=max_order)
