"""Semistandard tableau counting, used as an independent dimension oracle.

Nothing here touches monomials: the count for a dominant weight comes from
filling its Young diagram directly.
"""
from __future__ import annotations

from functools import lru_cache

from .weights import Weight, is_dominant


def shape_of(lam: Weight) -> tuple[int, ...]:
    """Row lengths of the diagram with ``lam.coeffs[i-1]`` columns of height ``i``."""
    rows = []
    for r in range(1, lam.n + 1):
        length = sum(lam.coeffs[r - 1:])
        if length:
            rows.append(length)
    return tuple(rows)


def iter_ssyt(shape: tuple[int, ...], max_entry: int):
    """Yield every semistandard tableau of ``shape`` with entries in 1..max_entry.

    Rows weakly increase, columns strictly increase. Tableaux are yielded as
    tuples of row tuples.
    """
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = grid[r][c - 1]
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        # cells below in this column need strictly larger entries
        high = max_entry - sum(1 for rb in range(r + 1, len(shape)) if shape[rb] > c)
        for v in range(low, high + 1):
            grid[r][c] = v
            yield from fill(k + 1)
        grid[r][c] = 0

    yield from fill(0)


@lru_cache(maxsize=None)
def ssyt_count(n: int, lam: Weight) -> int:
    """Number of semistandard tableaux of the shape of ``lam`` with entries at most n+1."""
    if lam.n != n:
        raise ValueError(f"weight of rank {lam.n} given for rank {n}")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return sum(1 for _ in iter_ssyt(shape_of(lam), n + 1))
