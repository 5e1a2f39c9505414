"""
Eigenvalue machinery: a cyclic Jacobi solver for small symmetric matrices,
exact integer characteristic polynomials with integer root extraction, and
multiplicity clustering with integer snapping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

CLUSTER_TOL = 1e-6
JACOBI_OFFDIAG_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class NonIntegerSpectrumError(ArithmeticError):
    """An exact spectrum was expected to be integral but is not."""


class ConvergenceError(RuntimeError):
    pass


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = JACOBI_OFFDIAG_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps row by row until the off-diagonal Frobenius norm falls below
    ``tol`` relative to the matrix norm.  Deterministic sweep order, so the
    result is reproducible.  Returns eigenvalues sorted descending.
    """
    a = np.array(matrix, dtype=float)
    m = a.shape[0]
    if a.shape != (m, m):
        raise ValueError(f"not square: {a.shape}")
    if m == 0:
        return np.empty(0)
    if m == 1:
        return a[0].copy()
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:  # avoid overflow in theta**2
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) if theta != 0 else 1.0
                    t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    else:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return np.sort(np.diag(a))[::-1]


def snap_to_integer(value: float, tol: float = CLUSTER_TOL) -> float:
    nearest = round(value)
    return float(nearest) if abs(value - nearest) <= tol else float(value)


def cluster_eigenvalues(
    values: Sequence[float], tol: float = CLUSTER_TOL
) -> list[tuple[float, int]]:
    """Merge numerically equal eigenvalues into (value, multiplicity) pairs.

    Values within ``tol`` of each other are merged (mean representative) and
    the representative is snapped to the nearest integer when within ``tol``.
    Sorted descending.
    """
    ordered = sorted(values, reverse=True)
    clusters: list[tuple[float, int]] = []
    if not ordered:
        return clusters
    run = [ordered[0]]
    for v in ordered[1:]:
        if abs(v - run[-1]) <= tol:
            run.append(v)
        else:
            clusters.append((snap_to_integer(sum(run) / len(run), tol), len(run)))
            run = [v]
    clusters.append((snap_to_integer(sum(run) / len(run), tol), len(run)))
    return clusters


@dataclass
class SpectrumReport:
    """Sorted eigenvalue multiset with provenance.

    ``eigenvalues`` is descending (value, multiplicity); ``lambda1`` and
    ``lambda2`` are the largest and second largest *distinct* values.  For
    method "irrep" over an alternating-group connecting set only the distinct
    value set is contractually meaningful.
    """

    eigenvalues: list[tuple[float, int]]
    method: str
    lambda1: float = field(init=False)
    lambda2: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.eigenvalues:
            raise ValueError("empty spectrum")
        if self.method not in ("dense", "irrep", "natural", "quotient", "char"):
            raise ValueError(f"unknown method {self.method!r}")
        values = [v for v, _ in self.eigenvalues]
        if values != sorted(values, reverse=True):
            raise ValueError("eigenvalues must be sorted descending")
        self.lambda1 = values[0]
        self.lambda2 = values[1] if len(values) > 1 else values[0]

    @property
    def size(self) -> int:
        return sum(m for _, m in self.eigenvalues)

    def distinct(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.eigenvalues)

    def trace(self) -> float:
        return sum(v * m for v, m in self.eigenvalues)

    @staticmethod
    def from_values(values: Sequence[float], method: str) -> "SpectrumReport":
        return SpectrumReport(cluster_eigenvalues(values), method)


# ---------------------------------------------------------------------------
# Exact integer spectra


def charpoly_int(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Characteristic polynomial det(xI - M) of an integer matrix.

    Faddeev-LeVerrier with exact integer arithmetic; returns coefficients
    [1, c_{n-1}, ..., c_0] from the leading term down.
    """
    m = [[int(v) for v in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("not square")
    coeffs = [1]
    work = [[0] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # work <- M * (work + c_{k-1} I)
        shifted = [row[:] for row in work]
        for i in range(n):
            shifted[i][i] += coeffs[-1]
        work = [
            [sum(m[i][t] * shifted[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(work[i][i] for i in range(n))
        c, rem = divmod(-trace, k)
        assert rem == 0, "Faddeev-LeVerrier trace not divisible"
        coeffs.append(c)
    return coeffs


def _eval_poly(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[int], root: int) -> list[int]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + root * out[-1])
    assert coeffs[-1] + root * out[-1] == 0
    return out


def integer_roots(coeffs: Sequence[int], bound: int | None = None) -> dict[int, int]:
    """Roots with multiplicity of a monic integer polynomial, all of which
    must be integers; raises NonIntegerSpectrumError otherwise.

    Candidates are divisors of the constant term no larger in magnitude than
    ``bound`` (or the Cauchy root bound when absent); each found root is
    deflated out until the polynomial is fully factored.  Pass a sharp bound
    when available -- the constant term can be enormous and trial division up
    to its square root is hopeless, while any a-priori root bound keeps the
    scan tiny.
    """
    poly = list(coeffs)
    if not poly or poly[0] != 1:
        raise ValueError("polynomial must be monic")
    roots: dict[int, int] = {}
    while len(poly) > 1 and poly[-1] == 0:
        roots[0] = roots.get(0, 0) + 1
        poly = poly[:-1]
    while len(poly) > 1:
        constant = abs(poly[-1])
        cauchy = 1 + max(abs(c) for c in poly[1:])
        limit = min(bound, cauchy) if bound is not None else cauchy
        found = None
        for d in range(1, limit + 1):
            if constant % d:
                continue
            for candidate in (d, -d):
                if _eval_poly(poly, candidate) == 0:
                    found = candidate
                    break
            if found is not None:
                break
        if found is None:
            raise NonIntegerSpectrumError(
                f"no integer root of degree-{len(poly) - 1} factor {poly}"
            )
        roots[found] = roots.get(found, 0) + 1
        poly = _deflate(poly, found)
    return roots


def exact_integer_eigenvalues(matrix: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """(eigenvalue, multiplicity) pairs, descending, for an integer matrix
    whose spectrum is known to be integral.  The Gershgorin row-sum bound
    limits the root search."""
    rows = [[int(v) for v in row] for row in matrix]
    bound = max((sum(abs(v) for v in row) for row in rows), default=0)
    roots = integer_roots(charpoly_int(rows), bound)
    return sorted(roots.items(), key=lambda kv: -kv[0])


def is_exact_root(matrix: Sequence[Sequence[int]], value: Fraction | int) -> bool:
    """Whether ``value`` is a root of the exact characteristic polynomial."""
    coeffs = charpoly_int(matrix)
    value = Fraction(value)
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * value + c
    return acc == 0


# ---------------------------------------------------------------------------
# Weyl inequalities


def weyl_upper_bounds_hold(
    alpha: Sequence[float],
    beta: Sequence[float],
    gamma: Sequence[float],
    tol: float = CLUSTER_TOL,
) -> bool:
    """Check gamma_{i+j-1} <= alpha_i + beta_j for all valid i, j.

    Inputs are full descending eigenvalue lists of symmetric A, B and
    C = A + B of equal size.
    """
    m = len(gamma)
    if len(alpha) != m or len(beta) != m:
        raise ValueError("eigenvalue lists must have equal length")
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j - 1 <= m and gamma[i + j - 2] > alpha[i - 1] + beta[j - 1] + tol:
                return False
    return True
