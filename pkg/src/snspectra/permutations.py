"""
Permutations of {1..n} and enumeration of cycle connecting sets.

A permutation is stored as a tuple ``images`` where ``images[j-1]`` is the
image of the point ``j``.  Points are 1-based everywhere in the public API.
The composition convention is fixed repo-wide as ``(g * h)(x) = g(h(x))``,
i.e. ``h`` acts first.  Cayley adjacency elsewhere uses ``u ~ v`` iff
``u * v.inverse()`` is in the connecting set.

Connecting sets:

- ``full_cycles(n, k)``: all k-cycles in Sym(1..n), size ``(k-1)! * C(n, k)``.
- ``prefix_moving_cycles(n, k, r)``: the k-cycles moving every point of
  {1..r}, size ``(k-1)! * C(n-r, k-r)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Iterator, Sequence


class DegreeMismatchError(ValueError):
    """Raised when two permutations of different degree are combined."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}, immutable and hashable."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)((cycle[0],))):
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                images[a - 1] = b
        p = Permutation(tuple(images))
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for j, i in enumerate(self.images, start=1):
            inv[i - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition, each cycle led by its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cycle.append(x)
                seen[x - 1] = True
                x = self(x)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def parity(self) -> str:
        return parity(self)

    def is_even(self) -> bool:
        return parity(self) == "even"

    def __str__(self) -> str:
        return cycle_string(self)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Product g*h with h applied first: (g*h)(x) = g(h(x))."""
    if g.degree != h.degree:
        raise DegreeMismatchError(f"degrees {g.degree} != {h.degree}")
    return Permutation(tuple(g.images[x - 1] for x in h.images))


def inverse(g: Permutation) -> Permutation:
    return g.inverse()


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """x g x^{-1}; relabels the cycles of g by x, preserving cycle type."""
    return compose(compose(x, g), x.inverse())


def cycle_type(g: Permutation) -> tuple[int, ...]:
    """Weakly decreasing cycle lengths (including fixed points), summing to n."""
    lengths = [len(c) for c in g.cycles(include_fixed=True)]
    return tuple(sorted(lengths, reverse=True))


def parity(g: Permutation) -> str:
    """'even' or 'odd'; a k-cycle is even iff k is odd."""
    transpositions = sum(len(c) - 1 for c in g.cycles())
    return "even" if transpositions % 2 == 0 else "odd"


def validate_cycle_type(parts: Sequence[int], n: int) -> tuple[int, ...]:
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"parts must be weakly decreasing positive: {parts}")
    return parts


# ---------------------------------------------------------------------------
# Cycle notation


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like "(1,2,5)(3)(4)"; fixed points optional."""
    stripped = text.replace(" ", "")
    if stripped in ("", "()", "e", "id"):
        return Permutation.identity(degree)
    if not re.fullmatch(r"(\(\d+(,\d+)*\))+", stripped):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for group in _CYCLE_RE.findall(stripped):
        points = tuple(int(tok) for tok in group.split(","))
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle {group}")
        cycles.append(points)
    support = [p for c in cycles for p in c]
    if len(set(support)) != len(support):
        raise ValueError(f"cycles are not disjoint: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def cycle_string(g: Permutation, include_fixed: bool = False) -> str:
    cycles = g.cycles(include_fixed=include_fixed)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# Connecting sets


@dataclass(frozen=True)
class ConnectingSetSpec:
    """Symbolic description of a cycle connecting set.

    ``family`` is "full" (all k-cycles) or "prefix" (k-cycles moving all of
    {1..r}); ``r`` is None exactly for the "full" family.
    """

    family: str
    n: int
    k: int
    r: int | None = None

    def __post_init__(self) -> None:
        if self.family == "full":
            if not (1 < self.k <= self.n):
                raise ValueError(f"full cycles need 1 < k <= n, got k={self.k}, n={self.n}")
            if self.r is not None:
                raise ValueError("r is meaningless for the full-cycle family")
        elif self.family == "prefix":
            if self.r is None or not (1 <= self.r < self.k < self.n):
                raise ValueError(
                    f"prefix family needs 1 <= r < k < n, got r={self.r}, k={self.k}, n={self.n}"
                )
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def cardinality(self) -> int:
        if self.family == "full":
            return factorial(self.k - 1) * comb(self.n, self.k)
        return factorial(self.k - 1) * comb(self.n - self.r, self.k - self.r)

    def __str__(self) -> str:
        if self.family == "full":
            return f"C({self.n},{self.k})"
        return f"C({self.n},{self.k};{self.r})"


def full_cycles(n: int, k: int) -> ConnectingSetSpec:
    return ConnectingSetSpec("full", n, k)


def prefix_moving_cycles(n: int, k: int, r: int) -> ConnectingSetSpec:
    return ConnectingSetSpec("prefix", n, k, r)


_SPEC_RE = re.compile(r"C\(\s*(\d+)\s*,\s*(\d+)\s*(?:;\s*(\d+)\s*)?\)")


def parse_spec(text: str) -> ConnectingSetSpec:
    """Parse "C(n,k)" or "C(n,k;r)"."""
    m = _SPEC_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"bad connecting set spec: {text!r}")
    n, k, r = int(m.group(1)), int(m.group(2)), m.group(3)
    if r is None:
        return full_cycles(n, k)
    return prefix_moving_cycles(n, k, int(r))


def _cycles_on_support(support: tuple[int, ...], n: int) -> Iterator[Permutation]:
    # All (k-1)! distinct k-cycles on a fixed support, anchored at its least
    # point so each cycle is produced exactly once.
    anchor, rest = support[0], support[1:]
    for arrangement in itertools.permutations(rest):
        yield Permutation.from_cycles([(anchor,) + arrangement], n)


def enumerate_connecting_set(spec: ConnectingSetSpec) -> tuple[Permutation, ...]:
    """The explicit connecting set, sorted by image sequence (deterministic).

    The result excludes the identity, is closed under inverse, and every
    element is a single k-cycle.
    """
    n, k = spec.n, spec.k
    elements: list[Permutation] = []
    if spec.family == "full":
        supports = itertools.combinations(range(1, n + 1), k)
    else:
        tail = itertools.combinations(range(spec.r + 1, n + 1), k - spec.r)
        supports = (tuple(range(1, spec.r + 1)) + extra for extra in tail)
    for support in supports:
        elements.extend(_cycles_on_support(tuple(sorted(support)), n))
    elements.sort()
    assert len(elements) == spec.cardinality()
    return tuple(elements)


def generated_subgroup_kind(spec: ConnectingSetSpec) -> str:
    """'symmetric' iff k is even, else 'alternating' (k-cycles are even)."""
    if spec.n <= 4:
        raise ValueError("subgroup dichotomy only asserted for n > 4")
    return "symmetric" if spec.k % 2 == 0 else "alternating"


def closure(generators: Iterable[Permutation]) -> frozenset[Permutation]:
    """BFS closure under multiplication; desk-scale oracle, no Schreier-Sims."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    seen = {Permutation.identity(gens[0].degree)}
    frontier = list(seen)
    while frontier:
        next_frontier = []
        for g in frontier:
            for h in gens:
                p = g * h
                if p not in seen:
                    seen.add(p)
                    next_frontier.append(p)
        frontier = next_frontier
    return frozenset(seen)


def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All of Sym(1..n) in lexicographic image order."""
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def alternating_group(n: int) -> tuple[Permutation, ...]:
    return tuple(p for p in symmetric_group(n) if p.is_even())
