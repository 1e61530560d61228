"""Semistandard tableaux and Kostka numbers.

A semistandard tableau of shape ``mu`` has weakly increasing rows and
strictly increasing columns.  The Kostka number K(mu, pi) counts those of
content ``pi`` (entry i appears pi[i-1] times); it is nonzero exactly when
``mu`` dominates ``pi``.

Fillings are built value by value as horizontal strips: all cells holding
value i are added left-justified to the rows in one step, which keeps columns
strict by construction and prunes dead partial fillings early.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition, check_partition, dominates


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    def entry(self, i: int, j: int) -> int:
        """1-indexed access: row i, column j."""
        return self.rows[i - 1][j - 1]

    def content(self) -> tuple[int, ...]:
        """How many times each value 1..max occurs."""
        top = max((v for row in self.rows for v in row), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple[int, ...]:
        """Entries read row-major, top to bottom."""
        return tuple(v for row in self.rows for v in row)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if len(lower) > len(upper):
                return False
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True


def _strip_additions(
    current: tuple[int, ...], shape: Partition, count: int
) -> Iterator[tuple[int, ...]]:
    """All ways to grow ``current`` inside ``shape`` by a horizontal strip of
    ``count`` cells.

    Row i may grow at most to shape[i], and (for i > 0) not past the previous
    length of row i-1, so no two new cells share a column and every new cell
    sits on a strictly smaller entry.
    """
    n_rows = len(shape)

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == n_rows:
            if remaining == 0:
                yield prefix
            return
        low = current[i]
        # new row lengths stay weakly decreasing automatically: the bound by
        # the old length of the row above is the stricter one
        high = min(shape[i], current[i - 1] if i > 0 else shape[i])
        for new_len in range(low, min(high, low + remaining) + 1):
            yield from rec(i + 1, remaining - (new_len - low), prefix + (new_len,))

    yield from rec(0, count, ())


def _count_fillings(shape: Partition, content: tuple[int, ...]) -> int:
    n_rows = len(shape)

    @lru_cache(maxsize=None)
    def rec(state: tuple[int, ...], idx: int) -> int:
        if idx == len(content):
            return 1 if state == shape else 0
        total = 0
        for grown in _strip_additions(state, shape, content[idx]):
            total += rec(grown, idx + 1)
        return total

    return rec((0,) * n_rows, 0)


def count_fillings(mu: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``mu`` with the given content
    composition (zeros allowed, any order)."""
    mu = check_partition(mu)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError(f"content entries must be non-negative, got {content}")
    if sum(content) != sum(mu):
        raise ValueError(
            f"content sums to {sum(content)} but the shape has {sum(mu)} cells"
        )
    return _count_fillings(mu, content)


@lru_cache(maxsize=None)
def _kostka_cached(mu: Partition, pi: Partition) -> int:
    if not dominates(mu, pi):
        return 0
    return _count_fillings(mu, pi)


def kostka(mu: Sequence[int], pi: Sequence[int]) -> int:
    """The Kostka number K(mu, pi) for partitions of equal weight."""
    mu = check_partition(mu)
    pi = check_partition(pi)
    if sum(mu) != sum(pi):
        raise ValueError(f"shape and content weights differ: {mu}, {pi}")
    return _kostka_cached(mu, pi)


def enumerate_ssyt(mu: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of shape ``mu`` whose entry i occurs
    ``content[i-1]`` times, sorted by reading word."""
    mu = check_partition(mu)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError(f"content entries must be non-negative, got {content}")
    if sum(content) != sum(mu):
        raise ValueError(
            f"content sums to {sum(content)} but the shape has {sum(mu)} cells"
        )
    n_rows = len(mu)
    results: list[Tableau] = []

    def rec(state: tuple[int, ...], idx: int, rows: tuple[tuple[int, ...], ...]) -> None:
        if idx == len(content):
            if state == mu:
                results.append(Tableau(tuple(row for row in rows if row)))
            return
        value = idx + 1
        for grown in _strip_additions(state, mu, content[idx]):
            new_rows = tuple(
                rows[i] + (value,) * (grown[i] - state[i]) for i in range(n_rows)
            )
            rec(grown, idx + 1, new_rows)

    rec((0,) * n_rows, 0, ((),) * n_rows)
    results.sort(key=Tableau.reading_word)
    return results
