"""
Exact irreducible character values of Sym(1..n) via rim-hook recursion.

All values are exact integers; class-invariant eigenvalues are exact
rationals asserted to be integers.  A persistent per-degree cache of
character values can be loaded/saved by the CLI (see ``cache_path``).
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Sequence

from .diagrams import (
    dimension,
    diagram_string,
    hook_leg,
    is_hook,
    partitions_of,
    validate_diagram,
)
from .permutations import validate_cycle_type

CACHE_SCHEMA_VERSION = 1

# Memo shared by all callers; inserts are idempotent so concurrent updates
# cannot corrupt results.
_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


class SizeMismatchError(ValueError):
    pass


def class_size(ctype: Sequence[int]) -> int:
    """Number of permutations with the given cycle type."""
    n = sum(ctype)
    denom = 1
    multiplicity: dict[int, int] = {}
    for length in ctype:
        denom *= length
        multiplicity[length] = multiplicity.get(length, 0) + 1
    for m in multiplicity.values():
        denom *= factorial(m)
    return factorial(n) // denom


def class_sign(ctype: Sequence[int]) -> int:
    """Sign of any permutation with this cycle type."""
    return -1 if (sum(ctype) - len(ctype)) % 2 else 1


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    m = len(shape)
    return tuple(shape[i] + (m - 1 - i) for i in range(m))


def _shape_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    m = len(beta)
    rows = tuple(beta[i] - (m - 1 - i) for i in range(m))
    return tuple(p for p in rows if p > 0)


def _strip_removals(shape: tuple[int, ...], length: int):
    """All ways to remove a rim hook of the given length.

    Yields (smaller shape, height) where the sign contribution of the strip
    is (-1)**height.
    """
    beta = _beta_set(shape)
    bset = set(beta)
    for b in beta:
        target = b - length
        if target < 0 or target in bset:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = [target if x == b else x for x in beta]
        yield _shape_from_beta(new_beta), height


def _mn(shape: tuple[int, ...], parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    key = (shape, parts)
    cached = _MEMO.get(key)
    if cached is not None:
        return cached
    total = 0
    for smaller, height in _strip_removals(shape, parts[0]):
        total += (-1) ** height * _mn(smaller, parts[1:])
    _MEMO[key] = total
    return total


def mn_character(shape: Sequence[int], ctype: Sequence[int]) -> int:
    """Character value of the irreducible labeled by ``shape`` on the class
    of cycle type ``ctype``; exact integer."""
    shape = validate_diagram(shape)
    n = sum(shape)
    ctype = validate_cycle_type(ctype, n)
    if sum(ctype) != n:
        raise SizeMismatchError(f"|{shape}| != |{ctype}|")
    return _mn(shape, ctype)


def hook_value_on_ncycle(shape: Sequence[int]) -> int:
    """Character value at the n-cycle class: (-1)**leg for hooks, else 0."""
    shape = validate_diagram(shape)
    if not is_hook(shape):
        return 0
    return (-1) ** hook_leg(shape)


def class_eigenvalue(shape: Sequence[int], ctype: Sequence[int]) -> int:
    """Eigenvalue |class| * chi(h) / chi(1) of the class sum on the block
    labeled by ``shape``; raises if it fails to be an integer."""
    shape = validate_diagram(shape)
    value = Fraction(class_size(ctype) * mn_character(shape, ctype), dimension(shape))
    if value.denominator != 1:
        raise ArithmeticError(
            f"class eigenvalue for {shape} on {ctype} is not integral: {value}"
        )
    return int(value)


def max_ratio_diagram(
    n: int, ctype: Sequence[int]
) -> tuple[tuple[tuple[int, ...], ...], Fraction]:
    """Maximize chi(h)/chi(1) over irreducibles with chi(1) != 1.

    Returns (winning diagrams, ratio).  Ties are all reported; the scan is
    exhaustive over the partitions of n (desk scale).
    """
    if n <= 4:
        raise ValueError("maximization only supported for n > 4")
    ctype = validate_cycle_type(ctype, n)
    best: Fraction | None = None
    winners: list[tuple[int, ...]] = []
    for shape in partitions_of(n):
        dim = dimension(shape)
        if dim == 1:
            continue
        ratio = Fraction(mn_character(shape, ctype), dim)
        if best is None or ratio > best:
            best, winners = ratio, [shape]
        elif ratio == best:
            winners.append(shape)
    assert best is not None
    return tuple(winners), best


def character_table(n: int) -> tuple[tuple[tuple[int, ...], ...], list[list[int]]]:
    """(cycle types, rows) with rows indexed by partitions_of(n)."""
    classes = partitions_of(n)
    rows = [[mn_character(shape, c) for c in classes] for shape in classes]
    return classes, rows


def export_character_table_csv(n: int, path: str | os.PathLike) -> None:
    """CSV with one row per diagram, one column per cycle type, exact ints."""
    classes, rows = character_table(n)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("diagram," + ",".join(diagram_string(c) for c in classes) + "\n")
        for shape, row in zip(partitions_of(n), rows):
            fh.write(diagram_string(shape) + "," + ",".join(map(str, row)) + "\n")


# ---------------------------------------------------------------------------
# Persistent cache (one file per degree, versioned schema)


def cache_dir() -> Path:
    env = os.environ.get("SNSPECTRA_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "snspectra"


def cache_path(n: int) -> Path:
    return cache_dir() / f"characters-v{CACHE_SCHEMA_VERSION}-n{n}.json"


def _key_string(shape: tuple[int, ...], parts: tuple[int, ...]) -> str:
    return ",".join(map(str, shape)) + "|" + ",".join(map(str, parts))


def _parse_key(key: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    left, right = key.split("|")
    to_tuple = lambda s: tuple(int(x) for x in s.split(",")) if s else ()
    return to_tuple(left), to_tuple(right)


def save_character_cache(n: int) -> Path:
    entries = {
        _key_string(shape, parts): value
        for (shape, parts), value in _MEMO.items()
        if sum(shape) == n
    }
    path = cache_path(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"schema_version": CACHE_SCHEMA_VERSION, "n": n, "values": entries}
    path.write_text(json.dumps(payload))
    return path


def load_character_cache(n: int) -> int:
    """Merge cached values into the memo; returns the number loaded."""
    path = cache_path(n)
    if not path.exists():
        return 0
    payload = json.loads(path.read_text())
    if payload.get("schema_version") != CACHE_SCHEMA_VERSION:
        return 0
    loaded = 0
    for key, value in payload["values"].items():
        _MEMO.setdefault(_parse_key(key), value)
        loaded += 1
    return loaded
