"""
Theorem verification runs: compute the predicted largest / second largest
eigenvalues by the requested method and compare against the closed forms.

Outcomes are "match", "mismatch", "skipped" or "documented-discrepancy" (a
known inconsistency in the source material, reported but not fatal).
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from . import formulas, graphs, yor
from .characters import max_ratio_diagram
from .diagrams import dimension, partitions_of
from .eigen import CLUSTER_TOL, SpectrumReport
from .equitable import counted_quotient, quotient_B1, quotient_B2, quotient_eigenvalues
from .graphs import DenseCapExceededError, build, dense_spectrum
from .permutations import (
    ConnectingSetSpec,
    enumerate_connecting_set,
    full_cycles,
    prefix_moving_cycles,
)

THEOREMS = ("1A", "1B", "13", "52", "61", "42", "43")
METHODS = ("auto", "dense", "irrep", "natural", "quotient", "char", "all")
DENSE_AUTO_LIMIT = 720


@dataclass
class Outcome:
    theorem: str
    params: dict
    expected: object
    computed: object
    method: str
    outcome: str
    runtime_ms: float = 0.0
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.outcome in ("match", "documented-discrepancy", "skipped")


def _timed(fn: Callable[[], Outcome]) -> Outcome:
    start = time.perf_counter()
    out = fn()
    out.runtime_ms = round((time.perf_counter() - start) * 1000.0, 3)
    return out


def _group_order(n: int, kind: str) -> int:
    return factorial(n) if kind == "symmetric" else factorial(n) // 2


def _spectrum(spec: ConnectingSetSpec, kind: str, method: str) -> SpectrumReport:
    if method == "auto":
        method = "dense" if _group_order(spec.n, kind) <= DENSE_AUTO_LIMIT else "irrep"
    if method == "dense":
        return dense_spectrum(build(kind, spec), allow_large=True)
    if method == "irrep":
        connecting = enumerate_connecting_set(spec)
        return yor.full_spectrum_via_irreps(spec.n, connecting, kind)
    if method == "char":
        if spec.family != "full":
            raise ValueError("char method needs a conjugacy-class connecting set")
        ctype = (spec.k,) + (1,) * (spec.n - spec.k)
        return yor.char_spectrum(spec.n, ctype)
    if method == "natural":
        connecting = enumerate_connecting_set(spec)
        return graphs.natural_module_spectrum(spec.n, connecting)
    raise ValueError(f"method {method!r} not applicable here")


def _lambda_outcome(
    theorem: str,
    spec: ConnectingSetSpec,
    kind: str,
    method: str,
    expected: dict[str, int],
    params: dict,
) -> Outcome:
    def run() -> Outcome:
        try:
            report = _spectrum(spec, kind, method)
        except DenseCapExceededError as exc:
            return Outcome(theorem, params, expected, None, method, "skipped", detail=str(exc))
        computed = {"lambda1": report.lambda1, "lambda2": report.lambda2}
        match = all(
            abs(computed[key] - value) <= CLUSTER_TOL for key, value in expected.items()
        )
        return Outcome(
            theorem,
            params,
            expected,
            computed,
            report.method,
            "match" if match else "mismatch",
        )

    return _timed(run)


def verify_T1A(n: int, method: str = "auto") -> Outcome:
    """Full-cycle connecting set C(n, n)."""
    if n <= 4:
        return Outcome("1A", {"n": n}, None, None, method, "skipped", detail="n must be > 4")
    kind = "symmetric" if n % 2 == 0 else "alternating"
    expected = {
        "lambda1": formulas.full_cycle_lambda1(n),
        "lambda2": formulas.full_cycle_lambda2(n),
    }
    return _lambda_outcome("1A", full_cycles(n, n), kind, method, expected, {"n": n})


def verify_T1B(n: int, method: str = "auto") -> Outcome:
    """(n-1)-cycle connecting set C(n, n-1)."""
    if n <= 4:
        return Outcome("1B", {"n": n}, None, None, method, "skipped", detail="n must be > 4")
    kind = "symmetric" if n % 2 == 1 else "alternating"
    expected = {
        "lambda1": formulas.almost_full_cycle_lambda1(n),
        "lambda2": formulas.almost_full_cycle_lambda2(n),
    }
    return _lambda_outcome("1B", full_cycles(n, n - 1), kind, method, expected, {"n": n})


def verify_T13(n: int, r: int, method: str = "auto") -> Outcome:
    """Prefix-moving connecting set C(n, r+1; r)."""
    params = {"n": n, "r": r}
    if n <= 4 or not 2 <= r <= n - 2:
        return Outcome(
            "13", params, None, None, method, "skipped", detail="need n > 4, 2 <= r <= n-2"
        )
    kind = "symmetric" if r % 2 == 1 else "alternating"
    expected = {
        "lambda1": formulas.prefix_lambda1(n, r),
        "lambda2": formulas.prefix_lambda2(n, r),
    }
    spec = prefix_moving_cycles(n, r + 1, r)
    return _lambda_outcome("13", spec, kind, method, expected, params)


# ---------------------------------------------------------------------------
# Supporting lemmas


def verify_T52(n: int, k: int, r: int) -> Outcome:
    """Natural-module eigenvalues equal the four closed-form values; when the
    published scalar expression for mu2 deviates from the operator (it does
    for k - r >= 2) the case is recorded as a documented discrepancy."""

    def run() -> Outcome:
        params = {"n": n, "k": k, "r": r}
        mus = formulas.mu_values(n, k, r)
        connecting = enumerate_connecting_set(prefix_moving_cycles(n, k, r))
        report = graphs.natural_module_spectrum(n, connecting)
        computed = sorted({int(v) for v, _ in report.eigenvalues}, reverse=True)
        expected = sorted(set(mus), reverse=True)
        if computed != expected:
            return Outcome("52", params, expected, computed, "natural", "mismatch")
        printed = formulas.printed_mu2_variant(n, k, r)
        if printed == mus[1]:
            return Outcome("52", params, expected, computed, "natural", "match")
        return Outcome(
            "52", params, expected, computed, "natural", "documented-discrepancy",
            detail=(
                "published mu2 expression gives "
                f"{printed}, but the operator (and the published B1 matrix) "
                f"give {mus[1]} = (k-1)!C(n-r-1,k-r) - (k-2)!C(n-r-2,k-r-2)"
            ),
        )

    return _timed(run)


def verify_L61(n: int, r: int) -> list[Outcome]:
    """Multiplicity table on the natural module for k = r + 1, plus the
    documented discrepancy of the published third eigenvalue."""

    def run_table() -> Outcome:
        params = {"n": n, "r": r}
        mus = formulas.mu_values(n, r + 1, r)
        mults = formulas.natural_multiplicities(n, r)
        expected = sorted(
            ((v, m) for v, m in zip(mus, mults) if m > 0), key=lambda p: -p[0]
        )
        table = graphs.multiplicity_table(n, r)
        trace_ok = sum(v * m for v, m in table) == formulas.natural_trace(n, r)
        outcome = "match" if table == expected and trace_ok else "mismatch"
        return Outcome("61", params, expected, table, "natural", outcome)

    def run_variant() -> Outcome:
        params = {"n": n, "r": r}
        printed = formulas.printed_third_eigenvalue_variant(n, r)
        mu3 = formulas.mu3_closed_form(n, r)
        table = graphs.multiplicity_table(n, r)
        values = [v for v, _ in table]
        if printed == mu3:
            return Outcome(
                "61", params, mu3, printed, "natural", "match",
                detail="printed third eigenvalue agrees at these parameters",
            )
        outcome = "documented-discrepancy" if mu3 in values and printed not in values else "mismatch"
        return Outcome(
            "61", params, mu3, printed, "natural", outcome,
            detail=(
                "published table's third eigenvalue (r-1)(r-1)!(n-r-1)-r! is "
                "inconsistent with the trace identity; the operator has "
                f"(r-1)!((r-1)(n-r-1)-1) = {mu3} instead"
            ),
        )

    return [_timed(run_table), _timed(run_variant)]


def verify_L42(n: int) -> Outcome:
    """Character-ratio maximization at the n-cycle class."""

    def run() -> Outcome:
        params = {"n": n}
        ctype = (n,)
        if n % 2 == 1:
            diagram = (n - 2, 1, 1)
            ratio = Fraction(2, (n - 1) * (n - 2))
        else:
            diagram = (2,) + (1,) * (n - 2)
            ratio = Fraction(1, n - 1)
        winners, best = max_ratio_diagram(n, ctype)
        ok = diagram in winners and best == ratio
        return Outcome(
            "42",
            params,
            {"diagram": diagram, "ratio": str(ratio)},
            {"diagrams": winners, "ratio": str(best)},
            "char",
            "match" if ok else "mismatch",
        )

    return _timed(run)


def verify_L43(n: int) -> Outcome:
    """Character-ratio maximization at the (n-1)-cycle class."""

    def run() -> Outcome:
        params = {"n": n}
        ctype = (n - 1, 1)
        if n % 2 == 0:
            diagram = (n - 3, 2, 1)
            ratio = Fraction(3, n * (n - 2) * (n - 4))
        else:
            diagram = (2, 2) + (1,) * (n - 4)
            ratio = Fraction(2, n * (n - 3))
        winners, best = max_ratio_diagram(n, ctype)
        ok = diagram in winners and best == ratio
        return Outcome(
            "43",
            params,
            {"diagram": diagram, "ratio": str(ratio)},
            {"diagrams": winners, "ratio": str(best)},
            "char",
            "match" if ok else "mismatch",
        )

    return _timed(run)


def verify_quotients(n: int, k: int, r: int) -> list[Outcome]:
    """Closed-form quotient matrices against the neighbor-counted oracle, and
    their exact eigenvalue sets against the closed-form values."""
    outcomes = []
    mus = formulas.mu_values(n, k, r)
    expected_sets = {"B1": {mus[0], mus[1], mus[2]}, "B2": {mus[0], mus[2], mus[3]}}
    for which, closed in (("B1", quotient_B1(n, k, r)), ("B2", quotient_B2(n, k, r))):
        def run(which=which, closed=closed) -> Outcome:
            params = {"n": n, "k": k, "r": r, "which": which}
            equitable, counted = counted_quotient(n, k, r, which)
            eigen_ok = set(quotient_eigenvalues(closed)) == expected_sets[which]
            ok = equitable and counted == closed and eigen_ok
            return Outcome(
                "53" if which == "B1" else "54",
                params,
                closed,
                counted,
                "quotient",
                "match" if ok else "mismatch",
            )

        outcomes.append(_timed(run))
    return outcomes


def theorem_65_max_block_eigenvalues(
    n: int, r: int
) -> list[tuple[tuple[int, ...], int, float]]:
    """(shape, dim, max eigenvalue) for every block of dimension > n-1 of the
    prefix-moving set with k = r + 1."""
    connecting = enumerate_connecting_set(prefix_moving_cycles(n, r + 1, r))
    rows = []
    for shape in partitions_of(n):
        dim = dimension(shape)
        if dim <= n - 1:
            continue
        spectrum = yor.hplus_block_spectrum(shape, connecting)
        rows.append((shape, dim, spectrum[0][0]))
    return rows


# ---------------------------------------------------------------------------
# Run orchestration


def run_cases(
    theorem: str,
    n_values: Sequence[int],
    r_values: Sequence[int] | None = None,
    method: str = "auto",
) -> list[Outcome]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    methods = ["dense", "irrep"] if method == "all" else [method]
    outcomes: list[Outcome] = []
    for n in n_values:
        if theorem == "1A":
            outcomes.extend(verify_T1A(n, m) for m in methods)
        elif theorem == "1B":
            outcomes.extend(verify_T1B(n, m) for m in methods)
        elif theorem == "42":
            outcomes.append(verify_L42(n))
        elif theorem == "43":
            outcomes.append(verify_L43(n))
        elif theorem == "13":
            rs = r_values if r_values is not None else range(2, n - 1)
            for r in rs:
                outcomes.extend(verify_T13(n, r, m) for m in methods)
        elif theorem == "61":
            rs = r_values if r_values is not None else range(2, n - 1)
            for r in rs:
                outcomes.extend(verify_L61(n, r))
        elif theorem == "52":
            rs = r_values if r_values is not None else range(2, n - 1)
            for r in rs:
                for k in range(r + 1, n):
                    outcomes.append(verify_T52(n, k, r))
    return outcomes


def exit_code(outcomes: Sequence[Outcome]) -> int:
    return 0 if all(o.ok for o in outcomes) else 1


def to_json(outcomes: Sequence[Outcome]) -> str:
    return json.dumps([asdict(o) for o in outcomes], indent=2, default=str)


def to_csv(outcomes: Sequence[Outcome]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["theorem", "params", "expected", "computed", "method", "outcome", "runtime_ms", "detail"]
    )
    for o in outcomes:
        writer.writerow(
            [o.theorem, json.dumps(o.params), str(o.expected), str(o.computed),
             o.method, o.outcome, o.runtime_ms, o.detail]
        )
    return buf.getvalue()


def to_text(outcomes: Sequence[Outcome]) -> str:
    lines = []
    for o in outcomes:
        lines.append(
            f"[{o.outcome:>22}] theorem {o.theorem} {o.params} method={o.method} "
            f"expected={o.expected} computed={o.computed} ({o.runtime_ms} ms)"
            + (f" -- {o.detail}" if o.detail else "")
        )
    return "\n".join(lines)
