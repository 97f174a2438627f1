"""Exact stratum constants and finite-degree slope estimators.

For a stratum the three quantities of interest — the area constant c,
the exponent sum L and the limiting slope s — determine each other
through L = kappa + c and s = 12 c / L.  On hyperelliptic loci they
are known in closed form and every finite-degree orbit already has the
limiting slope; elsewhere the census ratio M/N estimates c and the
bundled reference table (data/appendix_b.csv) gives the limit values
for genus 3 to 6.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .census import Census, ResourceBudgetError, enumerate_census, target_class
from .involutions import is_hyperelliptic
from .orbits import ComponentSummary, component_slope, decompose
from .surface import StratumSignature

REFERENCE_GENUS_RANGE = (3, 6)

_DATA_FILE = Path(__file__).parent / "data" / "appendix_b.csv"


def kappa(stratum: StratumSignature) -> Fraction:
    """(2g-2 + sum m/(m+1)) / 12, exact."""
    return stratum.kappa


def hyperelliptic_constants(
    genus: int, zeros: int = 1
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (c, L, s) for a hyperelliptic locus.

    ``zeros=1`` is the single-zero shape (2g-2), ``zeros=2`` the
    two-equal-zeros shape (g-1, g-1).  The slope always comes out as
    8 + 4/g.
    """
    if genus < 2:
        raise ValueError(f"hyperelliptic constants need genus >= 2, got {genus}")
    g = genus
    if zeros == 1:
        c = Fraction(g * (2 * g + 1), 3 * (2 * g - 1))
        big_l = Fraction(g * g, 2 * g - 1)
    elif zeros == 2:
        c = Fraction((g + 1) * (2 * g + 1), 6 * g)
        big_l = Fraction(g + 1, 2)
    else:
        raise ValueError(f"zeros must be 1 or 2, got {zeros}")
    s = s_from_c_l(c, big_l)
    assert s == 8 + Fraction(4, g)
    return c, big_l, s


def s_from_c_l(c: Fraction, big_l: Fraction) -> Fraction:
    """Slope from area constant and exponent sum: 12c/L."""
    if big_l <= 0:
        raise ValueError(f"exponent sum must be positive, got {big_l}")
    return 12 * Fraction(c) / Fraction(big_l)


def l_from_s_kappa(s: Fraction, kap: Fraction) -> Fraction:
    """Invert the slope relation: L = 12 kappa / (12 - s)."""
    if s >= 12:
        raise ValueError(f"slope must be below 12, got {s}")
    if kap <= 0:
        raise ValueError(f"kappa must be positive, got {kap}")
    return 12 * Fraction(kap) / (12 - Fraction(s))


@dataclass(frozen=True)
class StratumConstants:
    """kappa always; exact c, L, s when the shape is hyperelliptic."""

    stratum: StratumSignature
    kappa: Fraction
    exact_c: Fraction | None
    exact_l: Fraction | None
    exact_s: Fraction | None


def stratum_constants(stratum: StratumSignature) -> StratumConstants:
    g = stratum.genus
    mu = stratum.mu
    if mu == (2 * g - 2,):
        c, big_l, s = hyperelliptic_constants(g, zeros=1)
    elif len(mu) == 2 and mu[0] == mu[1]:
        c, big_l, s = hyperelliptic_constants(g, zeros=2)
    else:
        c = big_l = s = None
    return StratumConstants(stratum, stratum.kappa, c, big_l, s)


@dataclass(frozen=True)
class ReferenceRow:
    genus: int
    mu: tuple[int, ...]
    label: str  # hyp | odd | even | nonhyp | all
    slope: Fraction


_reference_cache: list[ReferenceRow] | None = None


def load_reference_table() -> list[ReferenceRow]:
    """The bundled limiting-slope table, rows in file order."""
    global _reference_cache
    if _reference_cache is None:
        rows = []
        with open(_DATA_FILE, newline="") as f:
            for rec in csv.DictReader(f):
                rows.append(
                    ReferenceRow(
                        genus=int(rec["genus"]),
                        mu=tuple(int(x) for x in rec["mu"].split(",")),
                        label=rec["label"],
                        slope=Fraction(int(rec["s_num"]), int(rec["s_den"])),
                    )
                )
        _reference_cache = rows
    return list(_reference_cache)


def reference_rows(genus: int) -> list[ReferenceRow]:
    lo, hi = REFERENCE_GENUS_RANGE
    if not lo <= genus <= hi:
        raise ValueError(
            f"genus {genus} outside table range {lo}..{hi}"
        )
    return [r for r in load_reference_table() if r.genus == genus]


def component_label(comp: ComponentSummary) -> str:
    """hyp / odd / even / nonhyp, matching the reference table labels."""
    if comp.hyperelliptic:
        return "hyp"
    if comp.parity == 1:
        return "odd"
    if comp.parity == 0:
        return "even"
    return "nonhyp"


@dataclass(frozen=True)
class SweepRow:
    degree: int
    scope: str  # stratum | hyperelliptic | classes
    label: str  # all, or hyp/odd/even/nonhyp for class rows
    n_classes: int
    total_weight: Fraction

    @property
    def ratio(self) -> Fraction | None:
        """M/N, the finite-degree estimate of the area constant."""
        if self.n_classes == 0:
            return None
        return self.total_weight / self.n_classes


@dataclass(frozen=True)
class SweepReport:
    stratum: StratumSignature
    scope: str
    rows: tuple[SweepRow, ...]
    truncated_at: int | None = None  # degree at which the budget ran out


CensusProvider = Callable[[int, StratumSignature], Census]


def sweep(
    stratum: StratumSignature,
    d_max: int,
    scope: str = "stratum",
    workers: int = 1,
    budget: int | None = None,
    provider: CensusProvider | None = None,
) -> SweepReport:
    """One row per nonempty degree up to d_max, per requested scope.

    scope "stratum" totals the whole census, "hyperelliptic" restricts
    member-wise to flagged surfaces, "classes" groups orbits by their
    hyp/odd/even/nonhyp label.  A blown budget truncates the sweep and
    records the degree it happened at.
    """
    if scope not in ("stratum", "hyperelliptic", "classes"):
        raise ValueError(f"unknown scope {scope!r}")
    if provider is None:
        provider = lambda d, s: enumerate_census(
            d, s, workers=workers, budget=budget
        )
    rows: list[SweepRow] = []
    d_min = sum(m + 1 for m in stratum.mu)
    truncated = None
    for d in range(d_min, d_max + 1):
        if target_class(d, stratum) is None:
            continue
        try:
            census = provider(d, stratum)
        except ResourceBudgetError:
            truncated = d
            break
        if census.n_classes == 0:
            continue
        if scope == "stratum":
            rows.append(
                SweepRow(d, scope, "all", census.n_classes, census.total_weight)
            )
        elif scope == "hyperelliptic":
            flagged = [o for o in census if is_hyperelliptic(o)]
            rows.append(
                SweepRow(
                    d,
                    scope,
                    "hyp",
                    len(flagged),
                    sum((o.weight for o in flagged), Fraction(0)),
                )
            )
        else:
            groups: dict[str, list[ComponentSummary]] = {}
            for comp in decompose(census):
                groups.setdefault(component_label(comp), []).append(comp)
            for label in sorted(groups):
                comps = groups[label]
                rows.append(
                    SweepRow(
                        d,
                        scope,
                        label,
                        sum(c.n_classes for c in comps),
                        sum((c.total_weight for c in comps), Fraction(0)),
                    )
                )
    return SweepReport(stratum, scope, tuple(rows), truncated)


def row_slope(row: SweepRow, stratum: StratumSignature) -> Fraction | None:
    if row.n_classes == 0 or row.total_weight <= 0:
        return None
    return component_slope(row.n_classes, row.total_weight, stratum)


@dataclass(frozen=True)
class ComparisonRow:
    mu: tuple[int, ...]
    label: str
    reference_slope: Fraction
    exact_slope: Fraction | None  # closed form, hyperelliptic rows only
    estimate_degree: int | None
    estimate_slope: Fraction | None

    @property
    def exact_match(self) -> bool | None:
        if self.estimate_slope is None:
            return None
        return self.estimate_slope == self.reference_slope


def compare_with_reference(
    genus: int, reports: dict[tuple[int, ...], SweepReport]
) -> list[ComparisonRow]:
    """Join reference rows for one genus against the largest-d estimates.

    Deviations are reported, not judged: the table holds limits and no
    convergence rate is available for finite degrees.
    """
    out = []
    for ref in reference_rows(genus):
        stratum = StratumSignature(ref.mu)
        exact = None
        if ref.label == "hyp":
            exact = 8 + Fraction(4, genus)
        est_degree = est_slope = None
        report = reports.get(ref.mu)
        if report is not None:
            want = "all" if ref.label == "all" else ref.label
            matches = [r for r in report.rows if r.label == want and r.n_classes]
            if matches:
                best = max(matches, key=lambda r: r.degree)
                est_degree = best.degree
                est_slope = row_slope(best, stratum)
        out.append(
            ComparisonRow(
                mu=ref.mu,
                label=ref.label,
                reference_slope=ref.slope,
                exact_slope=exact,
                estimate_degree=est_degree,
                estimate_slope=est_slope,
            )
        )
    return out
