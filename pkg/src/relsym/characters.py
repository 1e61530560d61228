"""Exact character theory of the symmetric group.

Irreducible character values are computed by the Murnaghan-Nakayama rule in
its first-column hook (beta number) form.  A partition ``lam`` of length l is
encoded by the strictly decreasing set ``{lam[i] + (l - 1 - i)}``; removing a
border strip of length r means lowering one beta number by r into a vacant
slot, and the strip height is the number of beta numbers jumped over.  This
keeps everything in integer arithmetic and memoizes naturally on the pair
(shape, unused cycles).

Class functions are stored by cycle type with exact rational values, so
characters, denumerant traces, and their inner products share one type.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Sequence

from . import config
from .errors import ConsistencyError, ResourceLimitError
from .partitions import (
    Partition,
    check_partition,
    class_size,
    enumerate_partitions,
    multiplicity_factorial,
)
from .tableaux import kostka


@lru_cache(maxsize=None)
def _mn_value(shape: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1
    r = cycles[0]
    rest = cycles[1:]
    length = len(shape)
    beta = [shape[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for other in beta if nb < other < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_shape = tuple(
            x - (length - 1 - i) for i, x in enumerate(new_beta) if x - (length - 1 - i) > 0
        )
        term = _mn_value(new_shape, rest)
        total += -term if height % 2 else term
    return total


def irreducible_character_value(pi: Sequence[int], lam: Sequence[int]) -> int:
    """Value of the irreducible character indexed by ``pi`` on permutations
    of cycle type ``lam``; both must partition the same integer."""
    pi = check_partition(pi)
    lam = check_partition(lam)
    if sum(pi) != sum(lam):
        raise ValueError(f"character and class partitions differ in weight: {pi}, {lam}")
    # cycles processed in decreasing length order; lam is already sorted
    return _mn_value(pi, lam)


_TABLE_CACHE: dict[int, dict[Partition, dict[Partition, int]]] = {}
_TABLE_LOCK = threading.Lock()


def character_table(m: int, max_m: int | None = None) -> dict[Partition, dict[Partition, int]]:
    """Full table of irreducible character values for the symmetric group of
    degree ``m``, keyed ``table[pi][lam]``.

    Cached per ``m``; construction happens at most once per process even
    under concurrent callers.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    bound = config.MAX_CHARACTER_TABLE_M if max_m is None else max_m
    if m > bound:
        raise ResourceLimitError(f"character table for degree {m} exceeds the bound {bound}")
    with _TABLE_LOCK:
        table = _TABLE_CACHE.get(m)
        if table is None:
            parts = enumerate_partitions(m)
            table = {
                pi: {lam: _mn_value(pi, lam) for lam in parts} for pi in parts
            }
            _TABLE_CACHE[m] = table
    return table


@dataclass(frozen=True)
class ClassFunction:
    """A function on a symmetric group constant on conjugacy classes, stored
    as exact rationals indexed by cycle type."""

    m: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self) -> None:
        expected = set(enumerate_partitions(self.m))
        if set(self.values) != expected:
            raise ValueError(f"need a value for every cycle type of degree {self.m}")

    def __call__(self, lam: Sequence[int]) -> Fraction:
        return self.values[check_partition(lam)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.m != other.m:
            raise ValueError("cannot add class functions of different degrees")
        return ClassFunction(
            self.m, {lam: v + other.values[lam] for lam, v in self.values.items()}
        )

    def scale(self, c) -> "ClassFunction":
        c = Fraction(c)
        return ClassFunction(self.m, {lam: c * v for lam, v in self.values.items()})

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())


def class_function_from_ints(m: int, values: Mapping[Partition, int]) -> ClassFunction:
    return ClassFunction(m, {lam: Fraction(v) for lam, v in values.items()})


def irreducible_class_function(pi: Sequence[int]) -> ClassFunction:
    pi = check_partition(pi)
    row = character_table(sum(pi))[pi]
    return class_function_from_ints(sum(pi), row)


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    """The usual character inner product, summed by class.

    All class functions here are rational-valued, so the value on an inverse
    equals the value on the element and no conjugation is needed.
    """
    if phi.m != psi.m:
        raise ValueError("cannot pair class functions of different degrees")
    m = phi.m
    total = Fraction(0)
    for lam in enumerate_partitions(m):
        total += class_size(lam) * phi.values[lam] * psi.values[lam]
    return total / math.factorial(m)


def young_subgroup_classes(mu: Partition) -> Iterator[tuple[Partition, int]]:
    """Cycle types of the Young subgroup of shape ``mu`` together with the
    number of subgroup elements of that type.

    An element is a tuple of one permutation per factor; its cycle type is
    the merge of the factor cycle types and its count the product of the
    factor class sizes.
    """
    per_factor = [
        [(lam, class_size(lam)) for lam in enumerate_partitions(part)] for part in mu
    ]
    for combo in product(*per_factor):
        merged = tuple(sorted((p for lam, _ in combo for p in lam), reverse=True))
        count = math.prod(size for _, size in combo)
        yield merged, count


@lru_cache(maxsize=None)
def _restricted_trivial_cached(pi: Partition, mu: Partition) -> int:
    total = 0
    for lam, count in young_subgroup_classes(mu):
        total += count * _mn_value(pi, lam)
    value, rem = divmod(total, multiplicity_factorial(mu))
    if rem:
        raise ConsistencyError(
            f"restriction multiplicity for {pi} over the Young subgroup {mu} is not integral"
        )
    return value


def restricted_trivial_inner_product(pi: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of the trivial character in the restriction of the
    irreducible character ``pi`` to the Young subgroup of shape ``mu``.

    Computed as an average of character values over the subgroup, summed by
    subgroup cycle type rather than by element.  Equals the Kostka number
    K(pi, mu).
    """
    pi = check_partition(pi)
    mu = check_partition(mu)
    if sum(pi) != sum(mu):
        raise ValueError(f"partitions differ in weight: {pi}, {mu}")
    return _restricted_trivial_cached(pi, mu)


@lru_cache(maxsize=None)
def _induced_trivial_values(mu: Partition) -> tuple[int, ...]:
    """Values of the induced trivial character, aligned with the partition
    enumeration order of the degree."""
    m = sum(mu)
    table = character_table(m)
    classes = enumerate_partitions(m)
    values = [0] * len(classes)
    for pi in classes:
        coeff = kostka(pi, mu)
        if coeff == 0:
            continue
        row = table[pi]
        for i, lam in enumerate(classes):
            values[i] += coeff * row[lam]
    return tuple(values)


def induced_trivial_character(mu: Sequence[int]) -> ClassFunction:
    """The permutation character of the symmetric group acting on cosets of
    the Young subgroup of shape ``mu``: the Kostka-weighted sum of the
    irreducible characters dominating ``mu``."""
    mu = check_partition(mu)
    m = sum(mu)
    if m < 1:
        raise ValueError("the empty shape induces nothing")
    values = _induced_trivial_values(mu)
    return class_function_from_ints(
        m, dict(zip(enumerate_partitions(m), values))
    )


def trivial_character(m: int) -> ClassFunction:
    return class_function_from_ints(m, {lam: 1 for lam in enumerate_partitions(m)})
