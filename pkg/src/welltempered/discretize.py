"""Integer discretization of molds under threshold rounding.

The map sends each mold element mu_i to round(m * mu_i), where round floors
when the fractional part is below the threshold alpha and takes the ceiling
otherwise.  Because mold steps eventually drop below 1/m, the image is
cofinite: a truncation certificate pins down a prefix index N and a
conductor C so that everything at or beyond C is guaranteed present no
matter which alpha is used.  Sweeping alpha over (0, 1] produces finitely
many distinct images, one per gap between fractional parts; the sweep
enumerates them exactly, with alpha = 0 (pure ceiling) kept as a
distinguished extra interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exactnum import (
    CertifiedApprox,
    ExactValue,
    GoldenNumber,
    LogValue,
    exact_ceil,
    exact_floor,
    exact_frac,
)
from .molds import Mold, SpacingCertificateError

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _scaled(m: int, mu) -> ExactValue:
    """m * mu, staying inside mu's exact family."""
    if isinstance(mu, LogValue):
        return mu.scaled(m)
    if isinstance(mu, GoldenNumber):
        return mu * m
    return Fraction(mu) * m


@dataclass(frozen=True)
class TruncationCertificate:
    """Finite evidence that a discretized mold is cofinite in the integers.

    prefix_end is the certified index N: from N on, every scaled step
    m * (mu_(i+1) - mu_i) is strictly below 1, so discretized neighbours
    differ by at most 1 and no integer past the image of mu_N can be
    skipped, whatever the rounding threshold.  conductor is ceil(m * mu_N),
    an alpha-independent bound; per-threshold conductors found later can
    only be smaller.  horizon is the last index the step inequality was
    checked at exactly (chosen so downstream consumers see the discretized
    run reach conductor + 2m).
    """

    mold_name: str
    multiplicity: int
    prefix_end: int
    conductor: int
    horizon: int
    spacing_witness: str


@dataclass(frozen=True)
class Discretization:
    """One discretized image: index-to-value map plus its cofinite shape.

    values[i] = round(m * mu_i) for 0 <= i <= horizon.  prefix holds the
    members below the (minimal) conductor; every integer at or beyond the
    conductor is a member.  The index map is kept because collapse detection
    needs to know which mold indices landed on the same integer, not just
    the resulting set.
    """

    mold_name: str
    multiplicity: int
    values: tuple
    prefix_end: int
    conductor: int
    prefix: tuple

    def contains(self, n: int) -> bool:
        return n >= self.conductor or n in self.prefix

    def members_below(self, bound: int) -> list:
        out = [v for v in self.prefix if v < bound]
        out.extend(range(self.conductor, max(self.conductor, bound)))
        return out


def _make_discretization(mold_name: str, m: int, values: tuple, prefix_end: int) -> Discretization:
    members = set(values[: prefix_end + 1])
    c = values[prefix_end]
    while c - 1 in members:  # walk the conductor down through the solid run
        c -= 1
    prefix = tuple(sorted(v for v in members if v < c))
    return Discretization(mold_name, m, values, prefix_end, c, prefix)


def _certificate_with_values(mold: Mold, m: int):
    """Build the certificate and the scaled element list it certifies."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError("multiplicity must be a positive integer")
    prefix_end, witness = mold.spacing_index(m)
    svals = [_scaled(m, mold.element(i)) for i in range(prefix_end + 1)]
    conductor = exact_ceil(svals[prefix_end])
    target = conductor + 2 * m + 2
    horizon = prefix_end
    while exact_floor(svals[horizon]) < target:
        horizon += 1
        svals.append(_scaled(m, mold.element(horizon)))
    for i in range(prefix_end, horizon):
        if not svals[i + 1] < svals[i] + 1:
            raise SpacingCertificateError(
                f"mold {mold.name!r}: scaled step at index {i} is not below 1"
            )
    detail = f"{witness}; m*step < 1 checked exactly for indices {prefix_end}..{horizon}"
    cert = TruncationCertificate(mold.name, m, prefix_end, conductor, horizon, detail)
    return cert, svals


def truncation_certificate(mold: Mold, m: int) -> TruncationCertificate:
    """Certify prefix_end and conductor for discretizing mold at multiplicity m."""
    cert, _ = _certificate_with_values(mold, m)
    return cert


def _cmp_log_rational(lv: LogValue, r) -> int:
    """Sign of lv - r. Certified refinement first: the direct big-integer
    comparison raises the log argument to a denominator-sized power, which
    is hopeless for thresholds like 8631/10000."""
    if lv.is_integer():
        return (lv > r) - (lv < r)
    enc = CertifiedApprox(lv)
    for _ in range(12):
        if enc.upper < r:
            return -1
        if enc.lower > r:
            return 1
        enc.refine()
    return (lv > r) - (lv < r)


def _lt(x, y) -> bool:
    if isinstance(x, LogValue) and isinstance(y, (int, Fraction)):
        return _cmp_log_rational(x, y) < 0
    if isinstance(y, LogValue) and isinstance(x, (int, Fraction)):
        return _cmp_log_rational(y, x) > 0
    if isinstance(x, (GoldenNumber, LogValue)):
        return x < y
    if isinstance(y, (GoldenNumber, LogValue)):
        return y > x
    return x < y


def discretize(mold: Mold, m: int, alpha) -> Discretization:
    """The image of m * mold under threshold rounding at alpha.

    alpha may be an exact rational in [0, 1] or an AlphaInterval from
    alpha_sweep (whose stored representative is returned unchanged).
    """
    if isinstance(alpha, AlphaInterval):
        return alpha.representative
    if isinstance(alpha, bool) or not isinstance(alpha, (int, Fraction)):
        raise TypeError("alpha must be an exact rational or an AlphaInterval")
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    cert, svals = _certificate_with_values(mold, m)
    values = []
    for s in svals:
        fl = exact_floor(s)
        frac = exact_frac(s)
        if frac == 0:
            values.append(fl)
        else:
            values.append(fl if _lt(frac, alpha) else fl + 1)
    return _make_discretization(mold.name, m, tuple(values), cert.prefix_end)


@dataclass(frozen=True)
class AlphaInterval:
    """A maximal-by-construction run (lower, upper] of equal discretizations.

    The image set is constant for alpha in (lower, upper]; representative
    is the discretization evaluated at alpha = upper.  The distinguished
    pure-ceiling case is stored as the degenerate interval [0, 0].
    Endpoints are exact: fractional parts of scaled mold elements, or the
    outer rationals 0 and 1.
    """

    mold_name: str
    multiplicity: int
    lower: ExactValue
    upper: ExactValue
    representative: Discretization

    @property
    def is_ceiling_point(self) -> bool:
        return self.upper == 0

    def contains_alpha(self, alpha: Rational) -> bool:
        if self.is_ceiling_point:
            return alpha == 0
        if not _lt(self.lower, alpha):
            return False
        return not _lt(self.upper, alpha)


def alpha_sweep(mold: Mold, m: int) -> list:
    """All distinct discretizations of m * mold, as threshold intervals.

    Breakpoints are the distinct nonzero fractional parts of the scaled
    elements up to the certified prefix end; the image set is constant
    between consecutive breakpoints and changes exactly when alpha crosses
    one.  Fractional parts occurring only beyond the prefix end move
    individual index values but never the set, so they contribute no
    interval; representatives still account for them at alpha = upper.
    Returned sorted by lower endpoint, pure-ceiling interval first.
    """
    cert, svals = _certificate_with_values(mold, m)
    n_end, horizon = cert.prefix_end, cert.horizon
    floors = [exact_floor(s) for s in svals]
    fracs = [exact_frac(s) for s in svals]
    tagged = [(fracs[i], i) for i in range(horizon + 1) if fracs[i] != 0]
    tagged.sort()

    groups = []  # (fractional part, indices sharing it), ascending
    for frac, i in tagged:
        if groups and groups[-1][0] == frac:
            groups[-1][1].append(i)
        else:
            groups.append((frac, [i]))

    values = [floors[i] + (0 if fracs[i] == 0 else 1) for i in range(horizon + 1)]
    name = mold.name
    out = [AlphaInterval(name, m, _ZERO, _ZERO,
                         _make_discretization(name, m, tuple(values), n_end))]
    prev = _ZERO
    for frac, idxs in groups:
        if any(i <= n_end for i in idxs):
            snap = _make_discretization(name, m, tuple(values), n_end)
            out.append(AlphaInterval(name, m, prev, frac, snap))
            prev = frac
        for i in idxs:  # crossing this breakpoint: ceiling drops to floor
            values[i] = floors[i]
    out.append(AlphaInterval(name, m, prev, _ONE,
                             _make_discretization(name, m, tuple(values), n_end)))
    return out


def interval_for_alpha(intervals, alpha: Rational) -> AlphaInterval:
    """Locate the sweep interval containing an exact rational alpha."""
    for interval in intervals:
        if interval.contains_alpha(alpha):
            return interval
    raise ValueError(f"alpha {alpha} outside [0, 1]")
