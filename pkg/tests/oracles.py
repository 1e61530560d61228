"""Independent brute-force oracles the tests check the library against.

Nothing here imports the computation paths under test: solution counts come
from nested enumeration, tableau counts from filtering raw fillings,
character tables from coset actions plus Gram-Schmidt peeling, and ranks
from plain rational Gaussian elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations


def brute_force_denumerant(coins, d):
    """Count solutions by nested enumeration of each variable."""

    def rec(idx, remaining):
        if idx == len(coins):
            return 1 if remaining == 0 else 0
        total = 0
        step = coins[idx]
        for t in range(remaining // step + 1):
            total += rec(idx + 1, remaining - t * step)
        return total

    return rec(0, d)


def brute_force_kostka(shape, content):
    """Count semistandard fillings by filtering all distinct arrangements of
    the content multiset into the diagram, row-major."""
    entries = []
    for value, count in enumerate(content, start=1):
        entries.extend([value] * count)
    cells = sum(shape)
    assert len(entries) == cells
    count = 0
    for arrangement in set(permutations(entries)):
        rows = []
        pos = 0
        for length in shape:
            rows.append(arrangement[pos : pos + length])
            pos += length
        ok = all(
            rows[i][j] <= rows[i][j + 1]
            for i in range(len(rows))
            for j in range(len(rows[i]) - 1)
        ) and all(
            rows[i][j] < rows[i + 1][j]
            for i in range(len(rows) - 1)
            for j in range(len(rows[i + 1]))
        )
        if ok:
            count += 1
    return count


def compose(p, q):
    return tuple(p[i] for i in q)


def inverse(p):
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def cycle_type_of(p):
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def symmetric_group_elements(m):
    return [tuple(p) for p in permutations(range(m))]


def young_subgroup_elements(mu, m):
    """All permutations fixing the consecutive blocks of sizes mu setwise."""
    assert sum(mu) == m
    blocks = []
    start = 0
    for size in mu:
        blocks.append(list(range(start, start + size)))
        start += size
    elements = [tuple(range(m))]
    for block in blocks:
        new_elements = []
        for base in elements:
            for arrangement in permutations(block):
                images = list(base)
                for src, dst in zip(block, arrangement):
                    images[src] = dst
                new_elements.append(tuple(images))
        elements = new_elements
    return elements


def coset_induced_trivial_values(mu, m):
    """Values of the permutation character on cosets of the Young subgroup,
    by explicit coset enumeration: the number of left cosets a class
    representative fixes, per cycle type."""
    subgroup = set(young_subgroup_elements(mu, m))
    cosets = {}
    for sigma in symmetric_group_elements(m):
        coset = frozenset(compose(sigma, h) for h in subgroup)
        cosets[coset] = None
    coset_list = list(cosets)
    values = {}
    for rep in _class_representatives(m):
        fixed = 0
        for coset in coset_list:
            moved = frozenset(compose(rep, sigma) for sigma in coset)
            if moved == coset:
                fixed += 1
        values[cycle_type_of(rep)] = fixed
    return values


def _class_representatives(m):
    reps = {}
    for p in symmetric_group_elements(m):
        reps.setdefault(cycle_type_of(p), p)
    return list(reps.values())


def class_sizes_by_counting(m):
    sizes = {}
    for p in symmetric_group_elements(m):
        lam = cycle_type_of(p)
        sizes[lam] = sizes.get(lam, 0) + 1
    return sizes


def oracle_character_table(m):
    """The irreducible character table built without the hook/strip
    machinery: induced trivial characters from all Young subgroups (coset
    enumeration), peeled greedily in reverse lexicographic shape order.

    The permutation character of a shape contains its own irreducible once
    and otherwise only irreducibles of lexicographically larger shapes, so
    subtracting the already-found constituents leaves the new irreducible.
    """
    sizes = class_sizes_by_counting(m)
    order = math.factorial(m)
    shapes = _partitions_desc(m)
    table = {}
    for mu in shapes:
        phi = {lam: Fraction(v) for lam, v in coset_induced_trivial_values(mu, m).items()}
        for pi, chi in table.items():
            coeff = (
                sum(sizes[lam] * phi[lam] * chi[lam] for lam in sizes) / order
            )
            if coeff:
                phi = {lam: phi[lam] - coeff * chi[lam] for lam in phi}
        table[mu] = phi
    return {
        pi: {lam: int(v) for lam, v in row.items()} for pi, row in table.items()
    }


def _partitions_desc(m):
    def rec(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return list(rec(m, m))


def fraction_matrix_rank(rows):
    """Rank over the rationals by ordinary Gaussian elimination."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    for c in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if matrix[i][c] != 0), None)
        if piv is None:
            continue
        matrix[rank], matrix[piv] = matrix[piv], matrix[rank]
        scale = matrix[rank][c]
        matrix[rank] = [x / scale for x in matrix[rank]]
        for i in range(n_rows):
            if i != rank and matrix[i][c] != 0:
                f = matrix[i][c]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def hook_length_dimension(pi):
    """Number of standard tableaux of the shape, by the hook length
    product."""
    m = sum(pi)
    if m == 0:
        return 1
    conjugate = [sum(1 for part in pi if part > j) for j in range(pi[0])]
    product = 1
    for i, row in enumerate(pi):
        for j in range(row):
            product *= (row - j) + (conjugate[j] - i) - 1
    return math.factorial(m) // product
