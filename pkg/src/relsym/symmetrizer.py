"""Explicit relative symmetric polynomials for subgroups of a symmetric
group with integer-valued irreducible characters.

The averaging operator scaled by the character degree projects the space of
degree-d homogeneous polynomials onto its isotypic component.  Applying it
to single monomials and working with exact rational coefficients gives a
ground-truth construction against which every counting formula in the
package can be checked: norms, vanishing, and dimensions (the latter by
exact integer rank of the symmetrized-monomial coefficient matrix).

Integer-valued characters keep all arithmetic in the rationals; this covers
every irreducible character of a full symmetric group, but excludes, for
example, the faithful characters of a cyclic group of order three.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .characters import character_table
from .denumerant import denumerant
from .errors import ConsistencyError
from .groups import (
    PermutationGroup,
    Permutation,
    apply_to_exponents,
    cycle_type,
    identity_permutation,
    inverse,
)
from .irreducibles import integer_irreducible_characters
from .partitions import (
    ExponentVector,
    check_exponent_vector,
    check_partition,
    enumerate_gamma,
)


class CharacterSpec:
    """An integer-valued irreducible character of a permutation group,
    stored per element for fast symmetrizing.

    Construction validates that the values are constant on conjugacy
    classes, that the degree is positive, and that the character pairs to 1
    with itself (the irreducibility used by the projection identities).
    """

    def __init__(self, group: PermutationGroup, values: Mapping[Permutation, int]):
        element_values = dict(values)
        if set(element_values) != set(group.elements):
            raise ValueError("need a value for every group element")
        for cls in group.conjugacy_classes():
            first = element_values[cls[0]]
            if any(element_values[g] != first for g in cls):
                raise ValueError("character values must be constant on conjugacy classes")
        identity = identity_permutation(group.m)
        degree = element_values[identity]
        if degree < 1:
            raise ValueError("character degree must be positive")
        pairing = sum(
            element_values[g] * element_values[inverse(g)] for g in group.elements
        )
        if pairing != group.order:
            raise ValueError(
                f"self inner product is {Fraction(pairing, group.order)}, "
                "not 1: the character is not irreducible"
            )
        self.group = group
        self.degree = degree
        self._values = tuple(element_values[g] for g in group.elements)
        self._by_element = {g: element_values[g] for g in group.elements}

    @classmethod
    def from_class_values(
        cls, group: PermutationGroup, class_values: Mapping[Permutation, int]
    ) -> "CharacterSpec":
        """Build from one value per conjugacy class representative;
        membership is resolved by conjugacy search in the element list."""
        classes = group.conjugacy_classes()
        remaining = dict(class_values)
        values: dict[Permutation, int] = {}
        for group_class in classes:
            members = set(group_class)
            hits = [rep for rep in remaining if tuple(rep) in members]
            if len(hits) != 1:
                raise ValueError(
                    f"need exactly one representative per class, got {len(hits)} "
                    f"for the class of {group_class[0]}"
                )
            value = remaining.pop(hits[0])
            for g in group_class:
                values[g] = value
        if remaining:
            raise ValueError("some given representatives lie outside the group")
        return cls(group, values)

    @classmethod
    def from_cycle_type_values(
        cls, group: PermutationGroup, type_values: Mapping[tuple, int]
    ) -> "CharacterSpec":
        """Build from values given per cycle type (valid whenever the
        character is constant on cycle-type fibers, e.g. on a full symmetric
        group)."""
        values = {g: type_values[cycle_type(g)] for g in group.elements}
        return cls(group, values)

    def value(self, g: Permutation) -> int:
        return self._by_element[g]

    def items(self):
        return zip(self.group.elements, self._values)


def sn_character_spec(m: int, pi: Sequence[int]) -> CharacterSpec:
    """The irreducible character of the full symmetric group indexed by the
    partition ``pi``, as a CharacterSpec on the standard group."""
    pi = check_partition(pi)
    if sum(pi) != m:
        raise ValueError(f"{pi} is not a partition of {m}")
    group = PermutationGroup.symmetric(m)
    row = character_table(m)[pi]
    return CharacterSpec.from_cycle_type_values(group, row)


@dataclass(frozen=True)
class SymmetrizedPolynomial:
    """Exact rational coefficients over the monomial basis of one degree;
    zero coefficients are omitted and the zero polynomial is the empty map."""

    m: int
    d: int
    coefficients: Mapping[ExponentVector, Fraction]

    def is_zero(self) -> bool:
        return not self.coefficients

    def norm_squared(self) -> Fraction:
        return sum((c * c for c in self.coefficients.values()), Fraction(0))


def _symmetrize_terms(
    group: PermutationGroup,
    chi: CharacterSpec,
    terms: Mapping[ExponentVector, Fraction],
) -> dict[ExponentVector, Fraction]:
    out: dict[ExponentVector, Fraction] = {}
    for alpha, coeff in terms.items():
        for g, value in chi.items():
            if value == 0:
                continue
            beta = apply_to_exponents(g, alpha)
            out[beta] = out.get(beta, Fraction(0)) + coeff * value
    scale = Fraction(chi.degree, group.order)
    return {beta: c * scale for beta, c in out.items() if c != 0}


def symmetrize_monomial(
    group: PermutationGroup, chi: CharacterSpec, alpha: Sequence[int]
) -> SymmetrizedPolynomial:
    """Image of a single monomial under the degree-scaled averaging
    operator: the coefficient of the target exponent vector is
    degree / order times the character sum over the permutations carrying
    the source onto it."""
    alpha = check_exponent_vector(alpha, group.m)
    terms = _symmetrize_terms(group, chi, {alpha: Fraction(1)})
    return SymmetrizedPolynomial(group.m, sum(alpha), terms)


def symmetrize_polynomial(
    group: PermutationGroup, chi: CharacterSpec, poly: SymmetrizedPolynomial
) -> SymmetrizedPolynomial:
    """Linear extension of the symmetrizer; used to check idempotence."""
    return SymmetrizedPolynomial(
        poly.m, poly.d, _symmetrize_terms(group, chi, poly.coefficients)
    )


def norm_squared(
    group: PermutationGroup, chi: CharacterSpec, alpha: Sequence[int]
) -> Fraction:
    """Squared norm of the symmetrized monomial, by the stabilizer formula
    degree * [chi, 1]_stab / index, cross-checked against the direct
    coefficient sum (the two agree exactly for integer-valued characters,
    where the projection is self-adjoint)."""
    alpha = check_exponent_vector(alpha, group.m)
    stab = group.stabilizer(alpha)
    avg = Fraction(sum(chi.value(g) for g in stab.elements), stab.order)
    index = group.order // stab.order
    formula = Fraction(chi.degree) * avg / index
    direct = symmetrize_monomial(group, chi, alpha).norm_squared()
    if formula != direct:
        raise ConsistencyError(
            f"norm mismatch for {alpha}: formula {formula}, coefficients {direct}"
        )
    return formula


def _bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination: pivots are
    the first nonzero entry per column, every division is exact."""
    rows = [row[:] for row in matrix]
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivot_row = rows[r]
        p = pivot_row[c]
        for i in range(r + 1, n_rows):
            row = rows[i]
            f = row[c]
            if f == 0 and p == prev:
                continue
            for j in range(c + 1, n_cols):
                num = row[j] * p - f * pivot_row[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ConsistencyError("inexact division in fraction-free elimination")
                row[j] = q
            row[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def dimension_by_rank(
    group: PermutationGroup,
    chi: CharacterSpec,
    d: int,
    max_gamma: int | None = None,
) -> int:
    """Dimension of the symmetrized degree-d space as the exact rank of the
    matrix whose rows are the symmetrized monomials over all exponent
    vectors.

    The common positive factor degree / order is cleared first, leaving
    integer character sums; rows and columns follow the lexicographic
    exponent order.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    vectors = enumerate_gamma(group.m, d, max_elements=max_gamma)
    column = {beta: j for j, beta in enumerate(vectors)}
    matrix = []
    for alpha in vectors:
        row = [0] * len(vectors)
        for g, value in chi.items():
            if value:
                row[column[apply_to_exponents(g, alpha)]] += value
        matrix.append(row)
    return _bareiss_rank(matrix)


def dimension_by_character_sum(
    group: PermutationGroup, chi: CharacterSpec, d: int
) -> int:
    """Dimension of the symmetrized degree-d space from the character paired
    with the per-element solution counts of the cycle-type coin equations."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    counts: dict[tuple, int] = {}
    total = 0
    for g, value in chi.items():
        lam = cycle_type(g)
        if lam not in counts:
            counts[lam] = denumerant(lam, d)
        total += value * counts[lam]
    result = Fraction(chi.degree * total, group.order)
    if result.denominator != 1 or result < 0:
        raise ConsistencyError(
            f"character-sum dimension is not a non-negative integer: {result}"
        )
    return int(result)


def stabilizer(group: PermutationGroup, alpha: Sequence[int]) -> PermutationGroup:
    """The subgroup fixing ``alpha`` under coordinate permutation."""
    return group.stabilizer(alpha)


def character_specs_for_integer_irreducibles(
    group: PermutationGroup,
) -> list[CharacterSpec]:
    """CharacterSpec objects for every integer-valued irreducible character
    of the group."""
    specs = []
    for found in integer_irreducible_characters(group):
        class_values = dict(zip(found["classes"], found["values"]))
        specs.append(CharacterSpec.from_class_values(group, class_values))
    return specs
