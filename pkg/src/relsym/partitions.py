"""Partitions, exponent vectors, and the counting helpers built on them.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the partition of 0.  A partition doubles as a cycle type of the
symmetric group and as a Young subgroup shape.  Exponent vectors are plain
tuples of non-negative integers: an element of Gamma(m, d), the set of
m-tuples summing to d, is the exponent of a degree-d monomial in m variables.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import zip_longest
from typing import Iterator, Sequence

from . import config
from .errors import ResourceLimitError

Partition = tuple[int, ...]
ExponentVector = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalize a partition given as any integer sequence."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i + 1 < len(p) and p[i + 1] > x:
            raise ValueError(f"partition parts must be weakly decreasing, got {p}")
    return p


def check_exponent_vector(entries: Sequence[int], m: int | None = None) -> ExponentVector:
    """Validate an exponent vector; ``m``, when given, pins the length."""
    alpha = tuple(int(x) for x in entries)
    if m is not None and len(alpha) != m:
        raise ValueError(f"expected {m} entries, got {len(alpha)}")
    if not alpha:
        raise ValueError("exponent vector needs at least one entry")
    if any(x < 0 for x in alpha):
        raise ValueError(f"exponent entries must be non-negative, got {alpha}")
    return alpha


def weight(partition: Sequence[int]) -> int:
    return sum(partition)


def dominates(mu: Partition, pi: Partition) -> bool:
    """Whether ``mu`` majorizes ``pi``: every prefix sum of ``pi`` is at most
    the matching prefix sum of ``mu``.

    Both partitions must have the same weight.  The shorter partition is
    padded with zeros; for equal weights this padded condition is equivalent
    to checking prefixes only up to the shorter length, because once one
    partition is exhausted its prefix sums are constant at the full weight.
    """
    if sum(mu) != sum(pi):
        raise ValueError(f"cannot compare partitions of different weights: {mu}, {pi}")
    mu_sum = pi_sum = 0
    for a, b in zip_longest(mu, pi, fillvalue=0):
        mu_sum += a
        pi_sum += b
        if pi_sum > mu_sum:
            return False
    return True


def multiplicity_partition(alpha: Sequence[int]) -> Partition:
    """The multiplicities of the distinct values occurring in ``alpha``,
    sorted descending.

    Values that do not occur contribute nothing, so the result is a genuine
    partition of ``len(alpha)``.
    """
    alpha = check_exponent_vector(alpha)
    return tuple(sorted(Counter(alpha).values(), reverse=True))


def multiplicity_factorial(mu: Sequence[int]) -> int:
    """The product of the factorials of the parts of ``mu``.

    For ``mu = multiplicity_partition(alpha)`` this is the order of the
    stabilizer of ``alpha`` in the full symmetric group, a Young subgroup.
    """
    out = 1
    for k in mu:
        out *= math.factorial(k)
    return out


def _partitions_desc(remaining: int, max_part: int, max_len: int) -> Iterator[Partition]:
    if remaining == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(remaining, max_part), 0, -1):
        for rest in _partitions_desc(remaining - first, first, max_len - 1):
            yield (first,) + rest


def enumerate_partitions(m: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order, starting at
    ``(m,)``.  ``max_length`` restricts the number of parts."""
    if m < 0:
        raise ValueError("cannot partition a negative integer")
    if max_length is not None and max_length < 1:
        raise ValueError("max_length must be positive")
    return list(_partitions_desc(m, m, m if max_length is None else max_length))


def gamma_size(m: int, d: int) -> int:
    """Cardinality of Gamma(m, d): C(d + m - 1, m - 1)."""
    return math.comb(d + m - 1, m - 1)


def _vectors_lex(m: int, d: int) -> Iterator[ExponentVector]:
    if m == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _vectors_lex(m - 1, d - first):
            yield (first,) + rest


def enumerate_gamma(m: int, d: int, max_elements: int | None = None) -> list[ExponentVector]:
    """All m-tuples of non-negative integers summing to ``d``, in
    lexicographic order.

    Refuses to materialize more than ``max_elements`` tuples (default
    ``config.MAX_GAMMA``); formula paths that scale past the cap work from
    orbit representatives instead.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be non-negative")
    cap = config.MAX_GAMMA if max_elements is None else max_elements
    size = gamma_size(m, d)
    if size > cap:
        raise ResourceLimitError(
            f"Gamma({m}, {d}) has {size} elements, exceeding the cap of {cap}"
        )
    return list(_vectors_lex(m, d))


def orbit_representatives(m: int, d: int) -> list[ExponentVector]:
    """One weakly decreasing representative per orbit of Gamma(m, d) under
    coordinate permutation: the partitions of ``d`` into at most ``m`` parts,
    zero-padded to length ``m``, in reverse-lexicographic order.

    The orbit of a representative ``nu`` has size
    ``m! / multiplicity_factorial(multiplicity_partition(nu))``.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    if d < 0:
        raise ValueError("degree must be non-negative")
    reps = []
    for p in enumerate_partitions(d, max_length=m):
        reps.append(p + (0,) * (m - len(p)))
    return reps


def centralizer_order(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``lam``:
    the product over distinct part sizes i of i**m_i * m_i!."""
    out = 1
    for part, count in Counter(lam).items():
        out *= part**count * math.factorial(count)
    return out


def class_size(lam: Sequence[int]) -> int:
    """Number of permutations with cycle type ``lam`` in the symmetric group
    on ``sum(lam)`` points."""
    lam = check_partition(lam)
    if not lam:
        raise ValueError("cycle type of a permutation in a non-trivial group expected")
    return math.factorial(sum(lam)) // centralizer_order(lam)
