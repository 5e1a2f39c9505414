"""
Young diagrams as weakly decreasing tuples of positive integers.

A diagram labels an irreducible character of Sym(1..n) where n is the sum of
the parts.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import re
from functools import cache
from math import factorial
from typing import Iterator, Sequence


def validate_diagram(rows: Sequence[int]) -> tuple[int, ...]:
    rows = tuple(rows)
    if not rows or any(p <= 0 for p in rows):
        raise ValueError(f"parts must be positive: {rows}")
    if list(rows) != sorted(rows, reverse=True):
        raise ValueError(f"parts must be weakly decreasing: {rows}")
    return rows


def parse_diagram(text: str) -> tuple[int, ...]:
    """Parse the "[4,2,1]" notation."""
    m = re.fullmatch(r"\[\s*(\d+(\s*,\s*\d+)*)\s*\]", text.strip())
    if m is None:
        raise ValueError(f"bad diagram notation: {text!r}")
    return validate_diagram(tuple(int(tok) for tok in m.group(1).split(",")))


def diagram_string(rows: Sequence[int]) -> str:
    return "[" + ",".join(map(str, rows)) + "]"


@cache
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in reverse lexicographic order ([n] first)."""

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def transpose(rows: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate diagram (reflect across the main diagonal)."""
    return tuple(sum(1 for p in rows if p > j) for j in range(rows[0]))


def hook_lengths(rows: tuple[int, ...]) -> list[list[int]]:
    cols = transpose(rows)
    return [
        [(rows[i] - j) + (cols[j] - i) - 1 for j in range(rows[i])]
        for i in range(len(rows))
    ]


@cache
def dimension(rows: tuple[int, ...]) -> int:
    """Number of standard tableaux of the shape, by the hook length formula."""
    rows = validate_diagram(rows)
    n = sum(rows)
    product = 1
    for row in hook_lengths(rows):
        for h in row:
            product *= h
    d, rem = divmod(factorial(n), product)
    assert rem == 0
    return d


def is_hook(rows: tuple[int, ...]) -> bool:
    """True for shapes [n-m, 1^m] (including [n] and [1^n])."""
    return len(rows) == 1 or rows[1] == 1


def hook_leg(rows: tuple[int, ...]) -> int:
    if not is_hook(rows):
        raise ValueError(f"{rows} is not a hook")
    return len(rows) - 1


def branch_restrict(rows: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Diagrams obtained by removing one removable corner box.

    These label the irreducible constituents of the restriction to the
    point-stabilizer subgroup one degree down; each occurs exactly once.
    """
    rows = validate_diagram(rows)
    if sum(rows) < 2:
        raise ValueError("need n >= 2 to remove a box")
    children = []
    for i, part in enumerate(rows):
        below = rows[i + 1] if i + 1 < len(rows) else 0
        if part > below:
            child = rows[:i] + ((part - 1,) if part > 1 else ()) + rows[i + 1:]
            children.append(child)
    return tuple(children)


def removable_corners(rows: tuple[int, ...]) -> list[tuple[int, int]]:
    """(row, col) 0-based positions of removable boxes."""
    out = []
    for i, part in enumerate(rows):
        below = rows[i + 1] if i + 1 < len(rows) else 0
        if part > below:
            out.append((i, part - 1))
    return out
