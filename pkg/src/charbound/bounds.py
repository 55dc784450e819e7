"""Explicit bound formulas and the verification pipeline that compares them
with exact values over grids of complete intersections.

Every reachable quantity is computed exactly; real-side data (signatures,
Euler characteristics of real loci) is never computed, only supplied, and
reports say which is which. Where a bound's base factor (d+n-2) vanishes,
the formula leaves its regime: those reports are flagged degenerate rather
than special-cased, and the flagged cases are settled by direct inspection.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .betti import betti_numbers, total_betti
from .chern import (
    DegreeError,
    ample_degree_sequence,
    chern_number,
    cotangent_chern,
    euler_characteristic,
    schur_class,
    squared_chern_pairing,
    twist_chern,
)
from .graded import TruncatedClass
from .varieties import CompleteIntersection, MultiIndex, Partition, partitions_of

CHECK_NAMES = (
    "degree-sequence",
    "log-concavity",
    "nef-chern",
    "cotangent-chern",
    "betti",
    "betti-recursive",
    "euler",
    "schur-positivity",
    "pontryagin",
)

DEGENERATE_NOTE = "degenerate bound base (d+n-2)=0; settled by direct inspection"


@dataclass(frozen=True)
class BoundReport:
    """One verified inequality instance.

    ``satisfied == (|exact_value| <= bound_value)`` whenever an exact value
    is present; one-sided checks therefore record their shortfall as the
    exact value and carry the raw quantity in ``note``.
    """

    subject: str
    n: int | None
    d: int | None
    multidegree: tuple | None
    index: tuple | None
    exact_value: int | None
    bound_value: int
    satisfied: bool
    margin: int | None
    degenerate: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "n": self.n,
            "d": self.d,
            "multidegree": None if self.multidegree is None else list(self.multidegree),
            "index": None if self.index is None else list(self.index),
            "exact": self.exact_value,
            "bound": self.bound_value,
            "satisfied": self.satisfied,
            "margin": self.margin,
            "degenerate": self.degenerate,
            "note": self.note,
        }

    def to_row(self) -> list:
        join = lambda t: "" if t is None else ",".join(map(str, t))
        blank = lambda v: "" if v is None else str(v)
        return [
            self.subject,
            blank(self.n),
            blank(self.d),
            join(self.multidegree),
            join(self.index),
            blank(self.exact_value),
            str(self.bound_value),
            "true" if self.satisfied else "false",
            blank(self.margin),
        ]

    def witness(self) -> str:
        return (
            f"subject={self.subject} n={self.n} d={self.d} "
            f"multidegree={self.multidegree} index={self.index} "
            f"exact={self.exact_value} bound={self.bound_value} "
            f"margin={self.margin}"
        )


CSV_COLUMNS = (
    "subject",
    "n",
    "d",
    "multidegree",
    "index",
    "exact",
    "bound",
    "satisfied",
    "margin",
)


def _abs_report(subject, ci, index, exact, bound, degenerate=False, note=""):
    return BoundReport(
        subject=subject,
        n=ci.dimension,
        d=ci.degree,
        multidegree=ci.multidegree,
        index=index,
        exact_value=exact,
        bound_value=bound,
        satisfied=abs(exact) <= bound,
        margin=bound - abs(exact),
        degenerate=degenerate,
        note=note,
    )


# -- closed-form bounds ----------------------------------------------------


def _validate_nd(n: int, d: int) -> None:
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")


def pontryagin_bound(n: int, d: int) -> int:
    """2^(n^2+3n) * d * (d+n-2)^n, the cap on real-side Pontryagin numbers."""
    _validate_nd(n, d)
    return 2 ** (n * n + 3 * n) * d * (d + n - 2) ** n


def betti_bound(n: int, d: int) -> int:
    """2^(n^2+2) * d^(n+1), the closed-form cap on the total Betti number."""
    _validate_nd(n, d)
    return 2 ** (n * n + 2) * d ** (n + 1)


def curve_betti_bound(d: int) -> int:
    """2 + (d-1)(d-2): exact for smooth plane curves, an upper bound otherwise."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return 2 + (d - 1) * (d - 2)


@lru_cache(maxsize=None)
def betti_bound_recursive(ci: CompleteIntersection) -> int:
    """Recurse through hyperplane sections: 4*b(H) + 2*2^(n^2)*d^(n+1)."""
    n, d = ci.dimension, ci.degree
    if n == 1:
        return curve_betti_bound(d)
    return 4 * betti_bound_recursive(ci.hyperplane_section()) + 2 * 2 ** (n * n) * d ** (
        n + 1
    )


def nef_chern_bound(n: int, d: int, index: MultiIndex) -> int:
    """d * (d+n-2)^|I|, the cap on Chern numbers of the nef cotangent twist."""
    _validate_nd(n, d)
    if index.weight > n:
        raise DegreeError(f"index weight {index.weight} exceeds dimension {n}")
    return d * (d + n - 2) ** index.weight


def cotangent_chern_bound(n: int, d: int, index: MultiIndex) -> int:
    """2^(n^2) * d * (d+n-2)^|I|, the cap on untwisted cotangent Chern numbers."""
    _validate_nd(n, d)
    if index.weight > n:
        raise DegreeError(f"index weight {index.weight} exceeds dimension {n}")
    return 2 ** (n * n) * d * (d + n - 2) ** index.weight


def signature_check(c2_squared: int, sigma: int) -> BoundReport:
    """Report on |3*sigma| <= c2^2 with an externally supplied signature."""
    exact = 3 * sigma
    return BoundReport(
        subject="signature",
        n=None,
        d=None,
        multidegree=None,
        index=None,
        exact_value=exact,
        bound_value=c2_squared,
        satisfied=abs(exact) <= c2_squared,
        margin=c2_squared - abs(exact),
        note="sigma supplied externally; c2^2 computed",
    )


def blowup_euler(
    chi_m: int, chi_c: int, nu: int, real_side: bool = False, chi_c_real: int = 0
) -> int:
    """Euler characteristic after blowing up along a codimension-nu center.

    Complex side: chi(M) + (nu-1)*chi(C). Real side: chi(M) + 2*chi(C_real),
    independent of nu.
    """
    if nu < 2:
        raise ValueError("blow-up center must have codimension >= 2")
    if real_side:
        return chi_m + 2 * chi_c_real
    return chi_m + (nu - 1) * chi_c


# -- verification grid -----------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Family of complete intersections to sweep, and which checks to run."""

    max_ambient_dim: int = 8
    max_degree_per_factor: int = 5
    max_codim: int = 7
    checks: tuple = CHECK_NAMES
    max_cases: int = 500

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))
        if self.max_ambient_dim < 2:
            raise ValueError("max_ambient_dim must be >= 2")
        if self.max_degree_per_factor < 1:
            raise ValueError("max_degree_per_factor must be >= 1")
        if self.max_codim < 1:
            raise ValueError("max_codim must be >= 1")
        if self.max_cases < 0:
            raise ValueError("max_cases must be >= 0")
        unknown = [c for c in self.checks if c not in CHECK_NAMES]
        if unknown:
            raise ValueError(
                f"unknown checks {unknown}; available: {', '.join(CHECK_NAMES)}"
            )

    @classmethod
    def from_dict(cls, data) -> "GridSpec":
        known = {
            "max_ambient_dim",
            "max_degree_per_factor",
            "max_codim",
            "checks",
            "max_cases",
        }
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown grid spec keys: {sorted(unknown)}")
        kwargs = {k: data[k] for k in known if k in data}
        if "checks" in kwargs:
            kwargs["checks"] = tuple(kwargs["checks"])
        return cls(**kwargs)

    def to_dict(self) -> dict:
        return {
            "max_ambient_dim": self.max_ambient_dim,
            "max_degree_per_factor": self.max_degree_per_factor,
            "max_codim": self.max_codim,
            "checks": list(self.checks),
            "max_cases": self.max_cases,
        }


def enumerate_varieties(spec: GridSpec):
    """All grid varieties in canonical order, capped; returns (cases, truncated)."""
    cases = []
    truncated = False
    for m in range(2, spec.max_ambient_dim + 1):
        for k in range(1, min(m - 1, spec.max_codim) + 1):
            for degs in combinations_with_replacement(
                range(1, spec.max_degree_per_factor + 1), k
            ):
                if len(cases) >= spec.max_cases:
                    truncated = True
                    return tuple(cases), truncated
                cases.append(CompleteIntersection(m, degs))
    return tuple(cases), truncated


@lru_cache(maxsize=None)
def _indices_up_to(n: int):
    # multi-indices with entries in [1, n] and weight <= n, one per multiset
    out = [MultiIndex(())]
    for total in range(1, n + 1):
        out.extend(MultiIndex(p) for p in partitions_of(total))
    return tuple(out)


@lru_cache(maxsize=None)
def _shapes_up_to(n: int):
    out = []
    for total in range(1, n + 1):
        out.extend(Partition(p) for p in partitions_of(total))
    return tuple(out)


def _degenerate(ci: CompleteIntersection, index: MultiIndex) -> bool:
    return ci.degree + ci.dimension - 2 == 0 and index.weight >= 1


def _check_degree_sequence(ci):
    seq = ample_degree_sequence(ci)
    d = ci.degree
    reports = []
    for i, value in enumerate(seq):
        bound = d ** (i + 1)
        reports.append(
            BoundReport(
                subject="degree-sequence",
                n=ci.dimension,
                d=d,
                multidegree=ci.multidegree,
                index=(i,),
                exact_value=value,
                bound_value=bound,
                satisfied=1 <= value <= bound,
                margin=bound - abs(value),
            )
        )
    return reports


def _check_log_concavity(ci):
    seq = ample_degree_sequence(ci)
    reports = []
    for i in range(2, len(seq)):
        value = seq[i] * seq[i - 2]
        bound = seq[i - 1] ** 2
        reports.append(
            BoundReport(
                subject="log-concavity",
                n=ci.dimension,
                d=ci.degree,
                multidegree=ci.multidegree,
                index=(i,),
                exact_value=value,
                bound_value=bound,
                satisfied=value <= bound,
                margin=bound - abs(value),
            )
        )
    return reports


def _check_nef_chern(ci):
    n = ci.dimension
    twisted = twist_chern(cotangent_chern(ci), 2)
    reports = []
    for index in _indices_up_to(n):
        value = chern_number(ci, twisted, index)
        bound = nef_chern_bound(n, ci.degree, index)
        degenerate = _degenerate(ci, index)
        reports.append(
            BoundReport(
                subject="nef-chern",
                n=n,
                d=ci.degree,
                multidegree=ci.multidegree,
                index=index.entries,
                exact_value=value,
                bound_value=bound,
                satisfied=0 <= value <= bound,
                margin=bound - abs(value),
                degenerate=degenerate,
                note=DEGENERATE_NOTE if degenerate else "",
            )
        )
    return reports


def _check_cotangent_chern(ci):
    n = ci.dimension
    cot = cotangent_chern(ci)
    reports = []
    for index in _indices_up_to(n):
        value = chern_number(ci, cot, index)
        bound = cotangent_chern_bound(n, ci.degree, index)
        degenerate = _degenerate(ci, index)
        reports.append(
            _abs_report(
                "cotangent-chern",
                ci,
                index.entries,
                value,
                bound,
                degenerate=degenerate,
                note=DEGENERATE_NOTE if degenerate else "",
            )
        )
    return reports


def _check_betti(ci):
    return [
        _abs_report("betti", ci, None, total_betti(ci), betti_bound(ci.dimension, ci.degree))
    ]


def _check_betti_recursive(ci):
    return [
        _abs_report("betti-recursive", ci, None, total_betti(ci), betti_bound_recursive(ci))
    ]


def _check_euler(ci):
    chi = euler_characteristic(ci)
    alternating = sum(b if i % 2 == 0 else -b for i, b in enumerate(betti_numbers(ci)))
    return [
        _abs_report(
            "euler",
            ci,
            None,
            chi - alternating,
            0,
            note=f"chi={chi} alternating_betti={alternating}",
        )
    ]


def _check_schur_positivity(ci):
    n = ci.dimension
    twisted = twist_chern(cotangent_chern(ci), 2)
    reports = []
    for shape in _shapes_up_to(n):
        cls = schur_class(twisted, shape)
        padded = cls * TruncatedClass.monomial(1, n - shape.size, n)
        pairing = padded.coefficient(n) * ci.degree
        shortfall = min(pairing, 0)
        reports.append(
            BoundReport(
                subject="schur-positivity",
                n=n,
                d=ci.degree,
                multidegree=ci.multidegree,
                index=shape.parts,
                exact_value=shortfall,
                bound_value=0,
                satisfied=shortfall == 0,
                margin=-abs(shortfall),
                note=f"pairing={pairing}",
            )
        )
    return reports


def _check_pontryagin(ci):
    n = ci.dimension
    if n % 4 != 0:
        return []
    twisted = twist_chern(cotangent_chern(ci), 2)
    bound = pontryagin_bound(n, ci.degree)
    reports = []
    for parts in partitions_of(n // 4):
        index = MultiIndex(parts)
        value = squared_chern_pairing(ci, twisted, index)
        reports.append(
            _abs_report(
                "pontryagin",
                ci,
                index.entries,
                value,
                bound,
                degenerate=_degenerate(ci, index),
            )
        )
    return reports


_CHECKS = {
    "degree-sequence": _check_degree_sequence,
    "log-concavity": _check_log_concavity,
    "nef-chern": _check_nef_chern,
    "cotangent-chern": _check_cotangent_chern,
    "betti": _check_betti,
    "betti-recursive": _check_betti_recursive,
    "euler": _check_euler,
    "schur-positivity": _check_schur_positivity,
    "pontryagin": _check_pontryagin,
}


@dataclass(frozen=True)
class GridResult:
    """Outcome of one grid sweep, deterministically ordered."""

    spec: GridSpec
    cases: tuple
    truncated: bool
    reports: tuple

    @property
    def violations(self) -> tuple:
        return tuple(r for r in self.reports if not r.satisfied and not r.degenerate)

    @property
    def flagged(self) -> tuple:
        return tuple(r for r in self.reports if r.degenerate)

    @property
    def all_satisfied(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        payload = {
            "grid": self.spec.to_dict(),
            "cases": len(self.cases),
            "truncated": self.truncated,
            "violations": len(self.violations),
            "reports": [r.to_dict() for r in self.reports],
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for report in self.reports:
            writer.writerow(report.to_row())
        return buffer.getvalue()

    def to_markdown(self) -> str:
        lines = [
            "| " + " | ".join(CSV_COLUMNS) + " |",
            "|" + "---|" * len(CSV_COLUMNS),
        ]
        for report in self.reports:
            lines.append("| " + " | ".join(report.to_row()) + " |")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "markdown":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")


def verify_grid(spec: GridSpec) -> GridResult:
    """Run every selected check over every grid variety."""
    cases, truncated = enumerate_varieties(spec)
    reports = []
    for ci in cases:
        for check in spec.checks:
            reports.extend(_CHECKS[check](ci))
    return GridResult(spec=spec, cases=cases, truncated=truncated, reports=tuple(reports))
