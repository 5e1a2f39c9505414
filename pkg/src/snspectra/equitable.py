"""
Equitable partitions, orbit partitions, and the two 3-block partitions of the
prefix-moving Cayley graphs with their exact quotient matrices.

The closed-form quotient matrices B1 (blocks by the image of the last point)
and B2 (blocks by the image of the first point) have exact integer entries;
their eigenvalues are extracted exactly from the characteristic polynomial.
"""

from __future__ import annotations

from math import factorial
from typing import Sequence

from .eigen import exact_integer_eigenvalues
from .formulas import binom
from .graphs import CayleyGraph
from .permutations import (
    ConnectingSetSpec,
    Permutation,
    conjugate,
    enumerate_connecting_set,
    prefix_moving_cycles,
)

VertexPartition = list[list[int]]


class MalformedPartitionError(ValueError):
    pass


def _check_partition(graph: CayleyGraph, blocks: VertexPartition) -> None:
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise MalformedPartitionError("empty block")
        if seen & set(block):
            raise MalformedPartitionError("blocks overlap")
        seen.update(block)
    if seen != set(range(graph.size)):
        raise MalformedPartitionError("blocks do not cover the vertex set")


def is_equitable(
    graph: CayleyGraph, blocks: VertexPartition
) -> tuple[bool, list[list[int]] | None]:
    """Full per-vertex equitability check; returns the quotient on success.

    Every vertex of every block is examined, not just one representative.
    """
    _check_partition(graph, blocks)
    block_of = [0] * graph.size
    for b, block in enumerate(blocks):
        for v in block:
            block_of[v] = b
    quotient: list[list[int]] = []
    for block in blocks:
        row: list[int] | None = None
        for v in block:
            counts = [0] * len(blocks)
            for u in graph.neighbors(v):
                counts[block_of[u]] += 1
            if row is None:
                row = counts
            elif counts != row:
                return False, None
        assert row is not None
        quotient.append(row)
    return True, quotient


def singleton_partition(graph: CayleyGraph) -> VertexPartition:
    return [[v] for v in range(graph.size)]


def orbit_partition(
    graph: CayleyGraph, generators: Sequence[tuple[Permutation, Permutation]]
) -> VertexPartition:
    """Orbits of a subgroup of F x G acting by (f, g): v -> f^-1 v g.

    Each generator must be an automorphism of the graph, which for this
    action is exactly the requirement that conjugation by f preserves the
    connecting set; this is checked and a failing generator raises.
    The orbit partition is guaranteed equitable (and asserted so).
    """
    hset = set(graph.connecting_set)
    actions = []
    for f, g in generators:
        if {conjugate(h, f.inverse()) for h in hset} != hset:
            raise ValueError(f"conjugation by {f} does not preserve the connecting set")
        finv = f.inverse()
        actions.append((finv, g))
    parent = list(range(graph.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, v in enumerate(graph.vertices):
        for finv, g in actions:
            j = graph.index_of(finv * v * g)
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
    orbits: dict[int, list[int]] = {}
    for i in range(graph.size):
        orbits.setdefault(find(i), []).append(i)
    blocks = sorted(orbits.values(), key=lambda b: b[0])
    ok, _ = is_equitable(graph, blocks)
    assert ok, "orbit partition failed the equitability check"
    return blocks


def _three_blocks(graph: CayleyGraph, point: int, r: int) -> VertexPartition:
    fixed, low, high = [], [], []
    for i, v in enumerate(graph.vertices):
        image = v(point)
        if image == point:
            fixed.append(i)
        elif image <= r:
            low.append(i)
        else:
            high.append(i)
    return [fixed, low, high]


def partition_P1(graph: CayleyGraph, r: int) -> VertexPartition:
    """Blocks by the image of the last point: fixed, in {1..r}, in {r+1..n-1}."""
    if not 2 <= r < graph.n:
        raise ValueError(f"need 2 <= r < n, got r={r}")
    return _three_blocks(graph, graph.n, r)


def partition_P2(graph: CayleyGraph, r: int) -> VertexPartition:
    """Blocks by the image of the first point: fixed, in {2..r}, in {r+1..n}."""
    if not 2 <= r < graph.n:
        raise ValueError(f"need 2 <= r < n, got r={r}")
    return _three_blocks(graph, 1, r)


# ---------------------------------------------------------------------------
# Closed-form quotients


def quotient_B1(n: int, k: int, r: int) -> list[list[int]]:
    """Quotient matrix of the last-point partition for C(n, k; r)."""
    if not 2 <= r < k < n:
        raise ValueError(f"need 2 <= r < k < n, got n={n}, k={k}, r={r}")
    f1, f2 = factorial(k - 1), factorial(k - 2)
    return [
        [
            f1 * binom(n - r - 1, k - r),
            r * f2 * binom(n - r - 1, k - r - 1),
            (n - r - 1) * f2 * binom(n - r - 2, k - r - 2),
        ],
        [
            f2 * binom(n - r - 1, k - r - 1),
            (r - 1) * f2 * binom(n - r, k - r),
            (n - r - 1) * f2 * binom(n - r - 1, k - r - 1),
        ],
        [
            f2 * binom(n - r - 2, k - r - 2),
            r * f2 * binom(n - r - 1, k - r - 1),
            (n - r - 2) * f2 * binom(n - r - 2, k - r - 2) + f1 * binom(n - r - 1, k - r),
        ],
    ]


def quotient_B2(n: int, k: int, r: int) -> list[list[int]]:
    """Quotient matrix of the first-point partition for C(n, k; r)."""
    if not 2 <= r < k < n:
        raise ValueError(f"need 2 <= r < k < n, got n={n}, k={k}, r={r}")
    f1, f2 = factorial(k - 1), factorial(k - 2)
    whole = binom(n - r, k - r)
    return [
        [0, (r - 1) * f2 * whole, (k - r) * f2 * whole],
        [f2 * whole, (r - 2) * f2 * whole, (k - r) * f2 * whole],
        [
            f2 * binom(n - r - 1, k - r - 1),
            (r - 1) * f2 * binom(n - r - 1, k - r - 1),
            (n - r - 1) * f2 * binom(n - r - 2, k - r - 2) + f1 * binom(n - r - 1, k - r),
        ],
    ]


def counted_quotient(
    n: int, k: int, r: int, which: str
) -> tuple[bool, list[list[int]]]:
    """Neighbor-counted quotient oracle, independent of the closed forms.

    A neighbor h*v of v lands in the block determined by h(v(p)) where p is
    the partition point, so the count for every vertex of a block is a pure
    point-image count; constancy across each block is verified exactly,
    which covers every vertex of the explicit graph.
    """
    if which not in ("B1", "B2"):
        raise ValueError(f"which must be B1 or B2, not {which!r}")
    connecting = enumerate_connecting_set(prefix_moving_cycles(n, k, r))
    if which == "B1":
        ranges = [(n, n), (1, r), (r + 1, n - 1)]
    else:
        ranges = [(1, 1), (2, r), (r + 1, n)]

    def block_of(image: int) -> int:
        for b, (lo, hi) in enumerate(ranges):
            if lo <= image <= hi:
                return b
        raise AssertionError(image)

    counts_by_point: dict[int, list[int]] = {}
    for p in range(1, n + 1):
        counts = [0] * 3
        for h in connecting:
            counts[block_of(h(p))] += 1
        counts_by_point[p] = counts
    quotient: list[list[int]] = []
    equitable = True
    for lo, hi in ranges:
        rows = [counts_by_point[p] for p in range(lo, hi + 1)]
        if any(row != rows[0] for row in rows[1:]):
            equitable = False
        quotient.append(rows[0])
    return equitable, quotient


def quotient_eigenvalues(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Exact integer eigenvalues of a small quotient matrix, descending with
    multiplicity; raises if any root fails to be an integer."""
    pairs = exact_integer_eigenvalues(matrix)
    out: list[int] = []
    for value, mult in pairs:
        out.extend([value] * mult)
    return out


def export_quotient_csv(
    matrix: Sequence[Sequence[int]], block_names: Sequence[str], path
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("block," + ",".join(block_names) + "\n")
        for name, row in zip(block_names, matrix):
            fh.write(name + "," + ",".join(str(int(v)) for v in row) + "\n")
