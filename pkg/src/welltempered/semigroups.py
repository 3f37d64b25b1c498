"""Numerical semigroups and their discretization-level predicates.

A numerical semigroup is stored canonically as a finite prefix plus a
conductor: the sorted members below the smallest integer from which
everything is present. Verification checks additive closure pair by pair,
reporting the smallest violating pair. On top of that sit the quantities
tied to discretized molds: the collapse (first integer hit by two
consecutive mold indices) and the even-index filter test (sums of
even-indexed elements must stay even-indexed until the collapse absorbs
them).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .discretize import (
    AlphaInterval,
    Discretization,
    _lt,
    _scaled,
    discretize,
)
from .exactnum import exact_floor, exact_frac
from .molds import Mold, PropertyReport


@dataclass(frozen=True)
class NumericalSemigroup:
    """Cofinite additive submonoid of the naturals, canonical form.

    prefix holds the members strictly below conductor; every integer at or
    beyond conductor is a member. The conductor is minimal, so equality of
    the dataclass fields is equality of the underlying sets. Elements are
    indexed s_0 = 0 < s_1 < s_2 < ... across prefix and tail.
    """

    prefix: tuple
    conductor: int

    def __contains__(self, n) -> bool:
        if not isinstance(n, int) or isinstance(n, bool):
            return False
        return n >= self.conductor or n in self.prefix

    def element(self, i: int) -> int:
        if i < 0:
            raise IndexError("element indices start at 0")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.conductor + (i - len(self.prefix))

    def index_of(self, n: int):
        """Index i with s_i = n, or None when n is not a member."""
        if n >= self.conductor:
            return len(self.prefix) + (n - self.conductor)
        pos = bisect_left(self.prefix, n)
        if pos < len(self.prefix) and self.prefix[pos] == n:
            return pos
        return None

    def elements_below(self, bound: int) -> list:
        out = [e for e in self.prefix if e < bound]
        out.extend(range(self.conductor, max(self.conductor, bound)))
        return out


def numerical_semigroup(elements, conductor: int) -> NumericalSemigroup:
    """Canonicalize a finite-complement set given by members plus conductor."""
    if isinstance(conductor, bool) or not isinstance(conductor, int) or conductor < 0:
        raise ValueError("conductor must be a nonnegative integer")
    members = set()
    for e in elements:
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise ValueError(f"member {e!r} is not a nonnegative integer")
        if e < conductor:
            members.add(e)
    if conductor > 0 and 0 not in members:
        raise ValueError("0 must be a member")
    c = conductor
    while c - 1 in members:
        c -= 1
    return NumericalSemigroup(tuple(sorted(e for e in members if e < c)), c)


def from_discretization(d: Discretization) -> NumericalSemigroup:
    return numerical_semigroup(d.prefix, d.conductor)


def verify_semigroup(candidate) -> PropertyReport:
    """Closure check; witness is the smallest violating pair if any.

    Accepts a NumericalSemigroup or a Discretization. Pairs a <= b with
    a + b < conductor + largest prefix member are covered; sums at or
    beyond the conductor are members outright, so the margin above the
    conductor cannot hide a violation.
    """
    prefix, conductor = tuple(candidate.prefix), candidate.conductor
    members = set(prefix)
    s_max = prefix[-1] if prefix else 0
    bound = conductor + s_max
    nonzero = [e for e in prefix if e > 0]
    for a in nonzero:
        if a + a >= conductor:
            break
        for b in nonzero[bisect_left(nonzero, a):]:
            s = a + b
            if s >= conductor:
                break
            if s not in members:
                return PropertyReport(
                    "semigroup-closure", "fails", bound, (a, b),
                    f"{a} + {b} = {s} is not a member")
    return PropertyReport("semigroup-closure", "holds-on-prefix", bound, None,
                          f"all pairwise sums below {bound} are members")


def genus_multiplicity(s: NumericalSemigroup):
    """(gaps, genus, multiplicity) of a verified semigroup."""
    member = set(s.prefix)
    gaps = tuple(n for n in range(s.conductor) if n not in member)
    return gaps, len(gaps), s.element(1)


@dataclass(frozen=True)
class CollapseRecord:
    """Smallest integer hit by two consecutive discretized mold indices."""

    kappa: int
    witness_index: int


def _interval_threshold(interval):
    if isinstance(interval, AlphaInterval):
        return interval.upper
    return interval


def collapse(mold: Mold, m: int, interval) -> CollapseRecord:
    """First repeated value of the discretization's index map.

    interval may be an AlphaInterval (its representative map is used, i.e.
    the threshold sits at the interval's upper endpoint) or an exact
    rational threshold. The map is extended past the stored horizon in the
    rare case the certified range shows no repeat yet.
    """
    d = discretize(mold, m, interval)
    values = list(d.values)
    alpha = _interval_threshold(interval)
    i = 0
    while True:
        if i + 1 == len(values):
            values.append(_round_threshold(mold, m, i + 1, alpha))
        if values[i] == values[i + 1]:
            return CollapseRecord(values[i], i)
        i += 1


def _round_threshold(mold: Mold, m: int, i: int, alpha) -> int:
    s = _scaled(m, mold.element(i))
    fl = exact_floor(s)
    frac = exact_frac(s)
    if frac == 0:
        return fl
    return fl if _lt(frac, alpha) else fl + 1


def even_filterable_semigroup(mold: Mold, m: int, interval) -> PropertyReport:
    """Sums of two even-indexed elements must be even-indexed or >= collapse.

    Checks every pair (s_2i, s_2j) whose sum lies below the collapse of the
    discretization; each such sum must land on an element of even index.
    The witness is the first violating index pair (2i, 2j).
    """
    record = collapse(mold, m, interval)
    s = from_discretization(discretize(mold, m, interval))
    kappa = record.kappa
    even = []
    i = 0
    while s.element(2 * i) < kappa:  # pairs beyond this cannot sum below kappa
        even.append(2 * i)
        i += 1
    identities = []
    for pos, i in enumerate(even):
        for j in even[pos:]:
            total = s.element(i) + s.element(j)
            if total >= kappa:
                continue
            k = s.index_of(total)
            if k is None or k % 2 == 1:
                where = "not a member" if k is None else f"s_{k} with odd index"
                return PropertyReport(
                    "even-filterable-semigroup", "fails", kappa, (i, j),
                    f"s_{i} + s_{j} = {total} is {where} below collapse {kappa}")
            if i > 0:
                identities.append(f"s_{i}+s_{j}=s_{k}")
    return PropertyReport(
        "even-filterable-semigroup", "holds-on-prefix", kappa, None,
        "; ".join(identities) or "no even-index sums below the collapse")
