"""Exhaustive feasibility searches across the metric and golden molds.

A multiplicity m is simultaneously discretizable when some rounding
threshold for the metric mold and some threshold for the golden mold
produce the same numerical semigroup.  Each side only admits finitely
many images, so the search enumerates both alpha sweeps, merges adjacent
regions with equal images, pairs the regions that agree, and re-verifies
every emitted match from scratch at an interior rational threshold.  An
analytic certificate settles all multiplicities above a fixed bound, so
feasibility is decided everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .discretize import AlphaInterval, _lt, _scaled, alpha_sweep, discretize
from .exactnum import cross_compare, exact_floor, exact_frac, exact_is_integer
from .molds import Mold, PropertyReport, golden_fractal_mold, metric_mold
from .semigroups import (
    CollapseRecord,
    NumericalSemigroup,
    collapse,
    even_filterable_semigroup,
    from_discretization,
    verify_semigroup,
)


@dataclass(frozen=True)
class SimultaneousMatch:
    """One semigroup realized by both molds, with the threshold regions."""

    m: int
    interval_L: AlphaInterval
    interval_F: AlphaInterval
    semigroup: NumericalSemigroup
    even_filterable: tuple[PropertyReport, PropertyReport]


@dataclass(frozen=True)
class TailCertificate:
    """Analytic infeasibility witness for one large multiplicity."""

    m: int
    anchor: int  # the element both scaled molds hit exactly at index 3
    comparison: str  # certified verdict on m*phi_4 versus m*lambda_4 + 2
    detail: str


@dataclass(frozen=True)
class ConstraintStep:
    """One replayed deduction in the uniqueness argument."""

    constraint: str
    description: str
    bound: str
    satisfied: bool


@dataclass(frozen=True)
class UniquenessReport:
    """The unique multiplicity-12 match plus its derivation trace."""

    match: SimultaneousMatch
    collapse_record: CollapseRecord
    trace: tuple[ConstraintStep, ...]

    @property
    def semigroup(self) -> NumericalSemigroup:
        return self.match.semigroup


@dataclass(frozen=True)
class ReferenceMatch:
    """A known threshold pair and the leading elements of its semigroup."""

    alpha_L: Fraction
    alpha_F: Fraction
    prefix: tuple[int, ...]


# the well-tempered harmonic semigroup, the unique multiplicity-12 answer
WELL_TEMPERED_H = NumericalSemigroup(
    prefix=(0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43), conductor=45)

# Known feasibility sets and one reference witness per feasible
# multiplicity; the command-line theorem checks compare against these.
FEASIBLE_MULTIPLICITIES = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 18})
EVEN_FILTERABLE_MULTIPLICITIES = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 10, 12})

REFERENCE_MATCHES = {
    1: ReferenceMatch(Fraction(1, 2), Fraction(1), (0, 1)),
    2: ReferenceMatch(Fraction(1, 2), Fraction(1), (0, 2, 3)),
    3: ReferenceMatch(Fraction(1, 2), Fraction(17, 20), (0, 3, 5, 6, 7, 8)),
    4: ReferenceMatch(Fraction(7, 25), Fraction(47, 100),
                      (0, 4, 7, 8, 10, 11, 12, 13, 14)),
    5: ReferenceMatch(Fraction(1, 2), Fraction(9, 10),
                      (0, 5, 8, 10, 12, 13, 14, 15, 16, 17)),
    6: ReferenceMatch(Fraction(1, 100), Fraction(41, 100),
                      (0, 6, 10, 12, 14, 16, 17, 18, 20, 21, 22, 23, 24, 25, 26)),
    7: ReferenceMatch(Fraction(1, 2), Fraction(97, 100),
                      (0, 7, 11, 14, 16, 18, 20, 21, 22, 23, 24, 25, 26, 27)),
    8: ReferenceMatch(Fraction(7, 20), Fraction(83, 100),
                      (0, 8, 13, 16, 19, 21, 23, 24, 26, 27, 28, 29, 30, 31, 32,
                       33, 34)),
    9: ReferenceMatch(Fraction(13, 100), Fraction(14, 25),
                      (0, 9, 15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 34, 35, 36,
                       37, 38, 39, 40, 41)),
    10: ReferenceMatch(Fraction(1, 2), Fraction(1),
                       (0, 10, 16, 20, 23, 26, 28, 30, 32, 33, 35, 36, 37, 38,
                        39, 40, 41, 42, 43, 44, 45)),
    12: ReferenceMatch(Fraction(2, 5), Fraction(1),
                       (0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43, 45, 46,
                        47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57)),
    13: ReferenceMatch(Fraction(9, 50), Fraction(47, 50),
                       (0, 13, 21, 26, 31, 34, 37, 39, 42, 44, 45, 47, 48, 50,
                        51, 52, 53, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65,
                        66, 67, 68)),
    18: ReferenceMatch(Fraction(1, 20), Fraction(22, 25),
                       (0, 18, 29, 36, 42, 47, 51, 54, 58, 60, 63, 65, 67, 69,
                        71, 72, 74, 76, 77, 78, 80, 81, 82, 83, 84, 85, 86, 87,
                        88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98)),
}

TAIL_START = 35


def _set_key(region: AlphaInterval) -> tuple[tuple[int, ...], int]:
    return region.representative.prefix, region.representative.conductor


def _merged_regions(mold: Mold, m: int) -> list[AlphaInterval]:
    """Alpha sweep with adjacent equal-image intervals fused.

    The fused region keeps the last constituent's representative, so it
    still describes the image at the region's upper endpoint.  The pure
    ceiling point stays a region of its own.
    """
    intervals = alpha_sweep(mold, m)
    regions = [intervals[0]]
    for iv in intervals[1:]:
        last = regions[-1]
        if not last.is_ceiling_point and _set_key(iv) == _set_key(last):
            regions[-1] = AlphaInterval(last.mold_name, last.multiplicity,
                                        last.lower, iv.upper, iv.representative)
        else:
            regions.append(iv)
    return regions


def _rational_inside(lo, hi) -> Fraction:
    # dyadic rational strictly between two exact breakpoints, found with
    # certified comparisons only
    for k in range(1, 64):
        scale = 1 << k
        j = exact_floor(_scaled(scale, hi))
        for num in (j, j - 1):
            cand = Fraction(num, scale)
            if _lt(lo, cand) and _lt(cand, hi):
                return cand
    raise RuntimeError("breakpoints are not separated")


def _region_alpha(region: AlphaInterval) -> Fraction:
    if region.is_ceiling_point:
        return Fraction(0)
    return _rational_inside(region.lower, region.upper)


def _midpoint_recheck(mold: Mold, m: int, region: AlphaInterval,
                      key: tuple[tuple[int, ...], int]) -> None:
    probe = discretize(mold, m, _region_alpha(region))
    if (probe.prefix, probe.conductor) != key:
        raise RuntimeError("sweep region failed its interior re-check")


@lru_cache(maxsize=None)
def _search(m: int) -> tuple[SimultaneousMatch, ...]:
    lmold = metric_mold()
    fmold = golden_fractal_mold()
    regions_l = _merged_regions(lmold, m)
    regions_f = _merged_regions(fmold, m)
    partners: dict[tuple, list[AlphaInterval]] = {}
    for region in regions_f:
        partners.setdefault(_set_key(region), []).append(region)
    closed: dict[tuple, bool] = {}
    matches = []
    for rl in regions_l:
        key = _set_key(rl)
        on_both_sides = partners.get(key)
        if not on_both_sides:
            continue
        if key not in closed:
            closed[key] = verify_semigroup(rl.representative).holds
        if not closed[key]:
            continue
        _midpoint_recheck(lmold, m, rl, key)
        for rf in on_both_sides:
            _midpoint_recheck(fmold, m, rf, key)
            matches.append(SimultaneousMatch(
                m=m,
                interval_L=rl,
                interval_F=rf,
                semigroup=from_discretization(rl.representative),
                even_filterable=(
                    even_filterable_semigroup(lmold, m, rl),
                    even_filterable_semigroup(fmold, m, rf),
                ),
            ))
    return tuple(matches)


def simultaneous_search(m: int) -> list[SimultaneousMatch]:
    """All verified ways both molds discretize to one semigroup at m.

    Matches are ordered by ascending metric-side region, then ascending
    golden-side region.  Every match has been re-discretized at an
    interior rational of each region and closure-verified.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("multiplicity must be a positive integer")
    return list(_search(m))


def multiplicity_census(m_max: int) -> set[int]:
    """The multiplicities up to m_max with at least one simultaneous match."""
    if not isinstance(m_max, int) or isinstance(m_max, bool) or m_max < 1:
        raise ValueError("m_max must be a positive integer")
    return {m for m in range(1, m_max + 1) if _search(m)}


def even_filterable_census(m_max: int) -> set[int]:
    """Multiplicities whose some match is even-filterable on both sides."""
    if not isinstance(m_max, int) or isinstance(m_max, bool) or m_max < 1:
        raise ValueError("m_max must be a positive integer")
    found = set()
    for m in range(1, m_max + 1):
        for match in _search(m):
            if all(report.holds for report in match.even_filterable):
                found.add(m)
                break
    return found


def tail_certificate(m: int) -> TailCertificate:
    """Prove no simultaneous discretization exists at a large multiplicity.

    Both scaled molds contain 2m exactly at index 3, so equal images would
    need their index-4 values to round to the same integer; a certified
    comparison shows the golden value exceeds the metric value by more
    than 2, which makes that impossible.  Raises if the comparison cannot
    be certified.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < TAIL_START:
        raise ValueError(f"the analytic tail starts at multiplicity {TAIL_START}")
    lmold = metric_mold()
    fmold = golden_fractal_mold()
    third_l = _scaled(m, lmold.element(3))
    third_f = _scaled(m, fmold.element(3))
    if not (exact_is_integer(third_l) and exact_floor(third_l) == 2 * m):
        raise RuntimeError("metric mold lost its exact element at index 3")
    if not (exact_is_integer(third_f) and exact_floor(third_f) == 2 * m):
        raise RuntimeError("golden mold lost its exact element at index 3")
    verdict = cross_compare(_scaled(m, fmold.element(4)),
                            _scaled(m, lmold.element(4)) + 2)
    if verdict != "greater":
        raise RuntimeError(
            f"index-4 separation came back {verdict!r} at multiplicity {m}")
    return TailCertificate(
        m=m,
        anchor=2 * m,
        comparison="greater",
        detail=(f"both sides contain {2 * m} exactly; the next element rounds the "
                f"index-4 value, and the golden one exceeds the metric one by "
                f"more than 2, so the rounded values can never agree"),
    )


def h_uniqueness() -> UniquenessReport:
    """The single multiplicity-12 match, with its deduction chain replayed.

    The replay checks the forced steps: the fourth element must land on 28,
    which bounds both thresholds; the second element is forced to 19; and
    closure pushes 19 + 19 = 38 into the set, tightening the golden-side
    bound.  Any unsatisfied step raises.
    """
    matches = simultaneous_search(12)
    if len(matches) != 1:
        raise RuntimeError("expected a single simultaneous match at multiplicity 12")
    match = matches[0]
    s = match.semigroup
    lmold = metric_mold()
    fmold = golden_fractal_mold()
    fourth_l = _scaled(12, lmold.element(4))
    fourth_f = _scaled(12, fmold.element(4))
    frac_l4 = exact_frac(fourth_l)
    frac_f4 = exact_frac(fourth_f)
    frac_f8 = exact_frac(_scaled(12, fmold.element(8)))
    steps = (
        ConstraintStep(
            constraint="shared-fourth-element",
            description=(f"the fourth elements must agree, so the metric side "
                         f"rounds {float(fourth_l):.4f} up and the golden side "
                         f"rounds {float(fourth_f):.4f} down to 28"),
            bound=(f"alpha_L <= {float(frac_l4):.4f} "
                   f"and alpha_F > {float(frac_f4):.4f}"),
            satisfied=(28 in s
                       and not _lt(frac_l4, match.interval_L.upper)
                       and not _lt(match.interval_F.lower, frac_f4)),
        ),
        ConstraintStep(
            constraint="second-element-forced",
            description="the only workable second element is 19",
            bound="s_2 = 19",
            satisfied=s.element(2) == 19,
        ),
        ConstraintStep(
            constraint="doubling-the-second-element",
            description=(f"closure forces 19 + 19 = 38 into the set, so the "
                         f"golden side also rounds "
                         f"{float(_scaled(12, fmold.element(8))):.4f} down"),
            bound=f"alpha_F > {float(frac_f8):.4f}",
            satisfied=(38 in s and not _lt(match.interval_F.lower, frac_f8)),
        ),
    )
    unsatisfied = [step.constraint for step in steps if not step.satisfied]
    if unsatisfied:
        raise RuntimeError("constraint replay failed: " + ", ".join(unsatisfied))
    return UniquenessReport(
        match=match,
        collapse_record=collapse(fmold, 12, match.interval_F),
        trace=steps,
    )
