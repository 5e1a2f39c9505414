"""
Young's orthogonal representation and per-block spectra of connecting sets.

Each irreducible of Sym(1..n) is realized by real orthogonal matrices indexed
by standard tableaux.  The image of an inverse-closed connecting set summed
over the block is symmetric, so its spectrum is computed with the symmetric
Jacobi solver; the union of these block spectra over all diagrams is the
Cayley graph spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

import numpy as np

from . import characters
from .diagrams import dimension, partitions_of, validate_diagram
from .eigen import SpectrumReport, cluster_eigenvalues, jacobi_eigenvalues
from .permutations import Permutation

SYMMETRY_TOL = 1e-9
CONSTRUCTION_TOL = 1e-10

# Tableau = tuple of row tuples, e.g. ((1, 2), (3,)) for shape [2, 1].
Tableau = tuple[tuple[int, ...], ...]


@cache
def standard_tableaux(shape: tuple[int, ...]) -> tuple[Tableau, ...]:
    """All standard tableaux of the shape, in a fixed deterministic order.

    Entries 1..n are placed in increasing order, branching over the rows that
    can legally receive the next entry (lowest row first).  The first tableau
    is always the row-reading filling.
    """
    shape = validate_diagram(shape)
    n = sum(shape)
    results: list[Tableau] = []
    fills = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def place(value: int) -> None:
        if value > n:
            results.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            if fills[i] >= shape[i]:
                continue
            if i > 0 and fills[i] >= fills[i - 1]:
                continue
            rows[i].append(value)
            fills[i] += 1
            place(value + 1)
            fills[i] -= 1
            rows[i].pop()

    place(1)
    assert len(results) == dimension(shape)
    return tuple(results)


def _positions(tableau: Tableau) -> dict[int, tuple[int, int]]:
    return {
        value: (i, j)
        for i, row in enumerate(tableau)
        for j, value in enumerate(row)
    }


@dataclass(frozen=True)
class _Generator:
    """Structured form of the orthogonal matrix of one adjacent transposition.

    The matrix is block diagonal over tableaux: diagonal entries ``diag`` and
    symmetric couplings ``coeff`` between tableau pairs ``(p, q)``.
    """

    diag: np.ndarray
    p: np.ndarray
    q: np.ndarray
    coeff: np.ndarray

    def dense(self) -> np.ndarray:
        dim = len(self.diag)
        mat = np.diag(self.diag.copy())
        mat[self.p, self.q] = self.coeff
        mat[self.q, self.p] = self.coeff
        return mat

    def apply_left(self, m: np.ndarray) -> np.ndarray:
        out = self.diag[:, None] * m
        if len(self.p):
            out[self.p] += self.coeff[:, None] * m[self.q]
            out[self.q] += self.coeff[:, None] * m[self.p]
        return out

    def apply_right(self, m: np.ndarray) -> np.ndarray:
        out = m * self.diag[None, :]
        if len(self.p):
            out[:, self.p] += m[:, self.q] * self.coeff[None, :]
            out[:, self.q] += m[:, self.p] * self.coeff[None, :]
        return out


@cache
def _generator(shape: tuple[int, ...], i: int) -> _Generator:
    n = sum(shape)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} outside 1..{n - 1}")
    tableaux = standard_tableaux(shape)
    index = {t: idx for idx, t in enumerate(tableaux)}
    dim = len(tableaux)
    diag = np.zeros(dim)
    pairs_p, pairs_q, coeffs = [], [], []
    for t_idx, tab in enumerate(tableaux):
        pos = _positions(tab)
        (r1, c1), (r2, c2) = pos[i], pos[i + 1]
        axial = (c2 - r2) - (c1 - r1)
        if axial == 1:  # same row
            diag[t_idx] = 1.0
        elif axial == -1:  # same column
            diag[t_idx] = -1.0
        else:
            diag[t_idx] = 1.0 / axial
            swapped = tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
                for row in tab
            )
            u_idx = index[swapped]
            if u_idx > t_idx:
                pairs_p.append(t_idx)
                pairs_q.append(u_idx)
                coeffs.append(np.sqrt(1.0 - 1.0 / axial**2))
    return _Generator(
        diag,
        np.asarray(pairs_p, dtype=np.intp),
        np.asarray(pairs_q, dtype=np.intp),
        np.asarray(coeffs),
    )


def yor_generator(shape: Sequence[int], i: int) -> np.ndarray:
    """Orthogonal matrix of the adjacent transposition (i, i+1)."""
    return _generator(validate_diagram(shape), i).dense()


def adjacent_word(g: Permutation) -> tuple[int, ...]:
    """Factor g as a product of adjacent transpositions (i, i+1).

    The returned indices multiply left to right, i.e. g = s_{a1} s_{a2} ...
    Deterministic bubble-sort factorization.
    """
    images = list(g.images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(len(images) - 1):
            if images[j] > images[j + 1]:
                images[j], images[j + 1] = images[j + 1], images[j]
                swaps.append(j + 1)
                changed = True
    return tuple(reversed(swaps))


def yor_image(shape: Sequence[int], g: Permutation) -> np.ndarray:
    """Representation matrix of g on the block labeled by ``shape``."""
    shape = validate_diagram(shape)
    if g.degree != sum(shape):
        raise ValueError(f"degree {g.degree} != |{shape}|")
    mat = np.eye(dimension(shape))
    for a in adjacent_word(g):
        mat = _generator(shape, a).apply_right(mat)
    return mat


def relation_residual(shape: Sequence[int]) -> float:
    """Max residual over the defining relations of the generators:
    orthogonality, involutivity, commutation and braid."""
    shape = validate_diagram(shape)
    n = sum(shape)
    gens = [yor_generator(shape, i) for i in range(1, n)]
    eye = np.eye(dimension(shape))
    worst = 0.0
    for q in gens:
        worst = max(worst, np.abs(q.T @ q - eye).max())
        worst = max(worst, np.abs(q @ q - eye).max())
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if j - i >= 2:
                worst = max(worst, np.abs(gens[i] @ gens[j] - gens[j] @ gens[i]).max())
            else:
                lhs = gens[i] @ gens[j] @ gens[i]
                rhs = gens[j] @ gens[i] @ gens[j]
                worst = max(worst, np.abs(lhs - rhs).max())
    return worst


def _inverse_representatives(
    connecting_set: Iterable[Permutation],
) -> tuple[list[Permutation], list[Permutation]]:
    """Split an inverse-closed set into involutions and one element per
    {h, h^-1} pair (the image of the partner is the transpose)."""
    hset = set(connecting_set)
    involutions, reps = [], []
    for h in sorted(hset):
        hinv = h.inverse()
        if hinv == h:
            involutions.append(h)
        elif h < hinv:
            if hinv not in hset:
                raise ValueError(f"set is not inverse-closed: missing {hinv}")
            reps.append(h)
    return involutions, reps


_BLOCK_CACHE: dict[tuple[tuple[int, ...], tuple[Permutation, ...]], tuple[tuple[float, int], ...]] = {}


def hplus_matrix(shape: Sequence[int], connecting_set: Sequence[Permutation]) -> np.ndarray:
    """Sum of the representation matrices over the connecting set.

    Requires H = H^-1; the result must then be symmetric, and asymmetry
    beyond tolerance signals a factorization bug.  Words sharing a prefix
    reuse partial products.
    """
    shape = validate_diagram(shape)
    dim = dimension(shape)
    involutions, reps = _inverse_representatives(connecting_set)
    total = np.zeros((dim, dim))
    worklist = sorted(
        [(adjacent_word(h), False) for h in involutions]
        + [(adjacent_word(h), True) for h in reps]
    )
    stack = [np.eye(dim)]
    prev: tuple[int, ...] = ()
    for word, paired in worklist:
        common = 0
        for a, b in zip(word, prev):
            if a != b:
                break
            common += 1
        del stack[common + 1:]
        for a in word[common:]:
            stack.append(_generator(shape, a).apply_right(stack[-1]))
        prev = word
        mat = stack[len(word)]
        total += mat + mat.T if paired else mat
    asym = np.abs(total - total.T).max() if dim else 0.0
    if asym > SYMMETRY_TOL:
        raise ArithmeticError(f"H+ block for {shape} asymmetric by {asym:.3e}")
    return total


def hplus_block_spectrum(
    shape: Sequence[int], connecting_set: Sequence[Permutation]
) -> list[tuple[float, int]]:
    """Clustered eigenvalues of the connecting-set sum on one block."""
    shape = validate_diagram(shape)
    key = (shape, tuple(connecting_set))
    cached = _BLOCK_CACHE.get(key)
    if cached is not None:
        return list(cached)
    matrix = hplus_matrix(shape, connecting_set)
    if matrix.shape[0] > 150:
        values = np.linalg.eigvalsh(matrix)[::-1]
    else:
        values = jacobi_eigenvalues(matrix)
    clustered = cluster_eigenvalues(values)
    _BLOCK_CACHE[key] = tuple(clustered)
    return clustered


def full_spectrum_via_irreps(
    n: int, connecting_set: Sequence[Permutation], group_kind: str = "symmetric"
) -> SpectrumReport:
    """Cayley spectrum as the union of block spectra over all diagrams of n.

    Multiplicities are dim(shape) per block occurrence, matching the regular
    representation of Sym(1..n).  For ``group_kind`` "alternating" only the
    distinct-value set is meaningful (the connecting set generates the
    alternating group and the graph on all of Sym is a disjoint union).
    """
    if group_kind not in ("symmetric", "alternating"):
        raise ValueError(f"unknown group kind {group_kind!r}")
    connecting_set = tuple(connecting_set)
    if any(h.is_identity() for h in connecting_set):
        raise ValueError("connecting set may not contain the identity")
    values: list[float] = []
    for shape in partitions_of(n):
        dim = dimension(shape)
        for value, mult in hplus_block_spectrum(shape, connecting_set):
            values.extend([value] * (mult * dim))
    return SpectrumReport(cluster_eigenvalues(values), "irrep")


def char_spectrum(n: int, ctype: Sequence[int]) -> SpectrumReport:
    """Spectrum of a full-conjugacy-class connecting set from exact character
    scalars: the block of each diagram is the scalar |H| chi(h)/chi(1)."""
    values: list[float] = []
    for shape in partitions_of(n):
        dim = dimension(shape)
        values.extend([float(characters.class_eigenvalue(shape, ctype))] * dim * dim)
    return SpectrumReport(cluster_eigenvalues(values), "char")
