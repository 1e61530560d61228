"""Counting non-negative solutions of a1*t1 + ... + an*tn = d, and the same
count read as a symmetric group character.

A permutation with cycle lengths (a1, ..., an) fixes exactly that many
exponent vectors of degree d, so the count is the trace of the permutation
acting on degree-d monomials: a permutation character of the symmetric group
on m = a1 + ... + an points.  This module computes it three independent
ways: by dynamic programming over the coin values, as a sum of characters
induced from the stabilizer Young subgroups (one per orbit of exponent
vectors), and through the irreducible multiplicities that sum gives.
Agreement of all three is the package's central cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from .characters import (
    ClassFunction,
    character_table,
    class_function_from_ints,
    induced_trivial_character,
)
from .groups import apply_to_exponents, permutation_of_cycle_type
from .partitions import (
    Partition,
    check_partition,
    enumerate_gamma,
    enumerate_partitions,
    multiplicity_factorial,
    multiplicity_partition,
    orbit_representatives,
)
from .tableaux import kostka

CoinSystem = tuple[int, ...]


def check_coins(coins: Sequence[int]) -> CoinSystem:
    out = tuple(int(a) for a in coins)
    if not out:
        raise ValueError("need at least one coin")
    if any(a < 1 for a in out):
        raise ValueError(f"coin values must be positive, got {out}")
    return out


def denumerant(coins: Sequence[int], d: int) -> int:
    """Number of ways to pay ``d`` with unlimited coins of the given values
    (repeated values allowed, order irrelevant), by the standard
    one-dimensional dynamic program."""
    coins = check_coins(coins)
    if d < 0:
        raise ValueError("amount must be non-negative")
    counts = [1] + [0] * d
    for a in coins:
        for j in range(a, d + 1):
            counts[j] += counts[j - a]
    return counts[d]


def denumerant_series(coins: Sequence[int], d_max: int) -> list[int]:
    """Counts for all amounts 0..d_max, as the truncated coefficient list of
    the product of the geometric series 1/(1 - t**a) over the coins.

    Implemented as explicit polynomial multiplication so it shares no code
    with :func:`denumerant`.
    """
    coins = check_coins(coins)
    if d_max < 0:
        raise ValueError("amount must be non-negative")
    series = [1] + [0] * d_max
    for a in coins:
        factor = [1 if j % a == 0 else 0 for j in range(d_max + 1)]
        out = [0] * (d_max + 1)
        for i, c in enumerate(series):
            if c == 0:
                continue
            for j in range(d_max + 1 - i):
                if factor[j]:
                    out[i + j] += c
        series = out
    return series


def denumerant_class_function(m: int, d: int) -> ClassFunction:
    """The trace function of degree-d monomial permutation: its value on a
    cycle type equals the denumerant with that type as coin system."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    if d < 0:
        raise ValueError("amount must be non-negative")
    return class_function_from_ints(
        m, {lam: denumerant(lam, d) for lam in enumerate_partitions(m)}
    )


def verify_trace_identity(m: int, d: int, max_gamma: int | None = None) -> bool:
    """Check, one representative permutation per cycle type, that the number
    of exponent vectors fixed by the permutation equals the denumerant of its
    cycle type.  Enumerates all of Gamma(m, d), so it is capped."""
    gamma = enumerate_gamma(m, d, max_elements=max_gamma)
    expected = denumerant_class_function(m, d)
    for lam in enumerate_partitions(m):
        sigma = permutation_of_cycle_type(lam)
        fixed = sum(1 for alpha in gamma if apply_to_exponents(sigma, alpha) == alpha)
        if fixed != expected.values[lam]:
            return False
    return True


def denumerant_by_induced_characters(
    m: int, d: int, literal: bool = False, max_gamma: int | None = None
) -> ClassFunction:
    """Reassemble the denumerant class function from characters induced from
    exponent-vector stabilizers.

    The default path sums one induced trivial character per orbit of
    Gamma(m, d), keyed by the multiplicity partition of the orbit
    representative.  With ``literal=True``, the full average over all of
    Gamma(m, d) is computed instead, weighting each vector by its stabilizer
    order; that path repeats every orbit exactly enough to cancel the group
    order and exists only as a small-size cross-check.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    if d < 0:
        raise ValueError("amount must be non-negative")
    classes = enumerate_partitions(m)
    totals = [Fraction(0)] * len(classes)
    if not literal:
        for nu in orbit_representatives(m, d):
            induced = induced_trivial_character(multiplicity_partition(nu))
            for i, lam in enumerate(classes):
                totals[i] += induced.values[lam]
        return ClassFunction(m, dict(zip(classes, totals)))
    for alpha in enumerate_gamma(m, d, max_elements=max_gamma):
        stab = multiplicity_partition(alpha)
        order = multiplicity_factorial(stab)
        induced = induced_trivial_character(stab)
        for i, lam in enumerate(classes):
            totals[i] += order * induced.values[lam]
    scale = Fraction(1, math.factorial(m))
    return ClassFunction(m, {lam: scale * v for lam, v in zip(classes, totals)})


def denumerant_decomposition(m: int, d: int) -> dict[Partition, int]:
    """Multiplicity of each irreducible character in the denumerant class
    function: the Kostka column sums over the orbit multiplicity partitions."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    if d < 0:
        raise ValueError("amount must be non-negative")
    stabilizer_shapes = [
        multiplicity_partition(nu) for nu in orbit_representatives(m, d)
    ]
    out: dict[Partition, int] = {}
    for pi in enumerate_partitions(m):
        out[pi] = sum(kostka(pi, shape) for shape in stabilizer_shapes)
    return out


def class_function_from_decomposition(
    m: int, multiplicities: Mapping[Partition, int]
) -> ClassFunction:
    """Expand irreducible multiplicities back into a class function."""
    table = character_table(m)
    values = {lam: 0 for lam in enumerate_partitions(m)}
    for pi, mult in multiplicities.items():
        if mult == 0:
            continue
        row = table[check_partition(pi)]
        for lam in values:
            values[lam] += mult * row[lam]
    return class_function_from_ints(m, values)
