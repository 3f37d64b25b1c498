"""Real molds of numerical semigroups: builders and property checks.

A mold is an increasing sequence mu_0 = 0 < mu_1 < ... with vanishing gaps
that is closed under addition; "normalized" means mu_1 = 1.  The period
pi_k(M) collects the elements in [k, k+1), and the granularity is the size
of the first period.  Everything here works on exact values (Fraction,
GoldenNumber, LogValue); every verdict is prefix-bounded and reported with
the checked bound and, on failure, the smallest lexicographic witness.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exactnum import (
    TAU,
    CertifiedApprox,
    ExactValue,
    GoldenNumber,
    LogValue,
    exact_floor,
    golden_compare,
)

CutValue = Union[int, Fraction, GoldenNumber]


class SpacingCertificateError(ValueError):
    """Raised when a mold cannot certify a spacing bound for truncation."""


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a prefix-bounded mold property check."""

    property: str  # "mold-axioms" | "metric" | "fractal" | "even-filterable"
    verdict: str  # "holds-on-prefix" | "fails"
    prefix_bound: int
    witness: Optional[tuple] = None
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict == "holds-on-prefix"


@dataclass(frozen=True)
class PeriodSpec:
    """First period of a fractal mold: cut values 1 = c_0 < c_1 < ... < 2.

    All cuts must live in a single exact family: rational, or the golden
    ring Z[tau].  Mixing unrelated irrationals is rejected because the
    generation rule multiplies cut offsets.
    """

    cuts: tuple

    def __init__(self, cuts: Sequence[CutValue]):
        raw = []
        has_golden = False
        for c in cuts:
            if isinstance(c, GoldenNumber):
                if c.b == 0:
                    c = c.a
                else:
                    has_golden = True
            elif isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                raise ValueError("cuts must be rational or golden exact values")
            raw.append(c)
        if not raw or raw[0] != 1:
            raise ValueError("first cut must be exactly 1")
        if has_golden:
            norm = [c if isinstance(c, GoldenNumber) else GoldenNumber(c, 0) for c in raw]
        else:
            norm = [Fraction(c) for c in raw]
        for left, right in zip(norm, norm[1:]):
            if not left < right:
                raise ValueError("cuts must be strictly increasing")
        if not norm[-1] < 2:
            raise ValueError("cuts must stay below 2")
        object.__setattr__(self, "cuts", tuple(norm))

    @property
    def granularity(self) -> int:
        return len(self.cuts)

    @property
    def family(self) -> str:
        return "golden" if isinstance(self.cuts[0], GoldenNumber) else "rational"

    def offsets(self) -> list:
        one = self.cuts[0]
        return [c - one for c in self.cuts]


class Mold:
    """Base class: an exact-element accessor plus optional spacing data."""

    name: str = ""
    kind: str = ""

    def element(self, i: int) -> ExactValue:
        raise NotImplementedError

    def elements(self, count: int) -> list:
        return [self.element(i) for i in range(count)]

    def spacing_index(self, m: int) -> tuple[int, str]:
        """Smallest certified index N with m * (mu_(i+1) - mu_i) < 1 for all i >= N.

        Returns (N, witness description).  Raises SpacingCertificateError if
        this mold kind has no certified spacing bound.
        """
        raise SpacingCertificateError(f"mold {self.name!r} has no spacing certificate")


class MetricMold(Mold):
    """The unique normalized metric mold: element i is log2(i + 1)."""

    name = "L"
    kind = "metric"

    def element(self, i: int) -> LogValue:
        if i < 0:
            raise IndexError("mold indices start at 0")
        return LogValue.log2(i + 1)

    def spacing_index(self, m: int) -> tuple[int, str]:
        if m < 1:
            raise ValueError("multiplicity must be >= 1")

        def ok(n: int) -> bool:
            return (n + 2) ** m < 2 * (n + 1) ** m

        hi = 1
        while not ok(hi):
            hi *= 2
        lo = 0
        while hi - lo > 1:  # smallest n passing; the ratio test is monotone in n
            mid = (lo + hi) // 2
            if ok(mid):
                hi = mid
            else:
                lo = mid
        n = hi
        return n, f"({n}+2)^{m} < 2*({n}+1)^{m} and (n+2)/(n+1) decreases in n"


def f_ell(ell: int, n: int, p) -> ExactValue:
    """Fractal subdivision recursion with left proportion p (0 < p < 1).

    f_0(0) = 0; f_ell(n) = p * f_(ell-1)(n) when n < 2^(ell-1), and
    p + (1-p) * f_(ell-1)(n - 2^(ell-1)) otherwise.
    """
    if ell < 0 or not 0 <= n < (1 << ell):
        raise ValueError("need 0 <= n < 2^ell")
    q = 1 - p
    out = 0 * p
    for k in range(ell):
        if (n >> k) & 1:
            out = p + q * out
        else:
            out = p * out
    return out


class GoldenFractalMold(Mold):
    """Granularity-2 fractal mold with golden cut: element i is
    ell + f_ell(i + 1 - 2^ell) at proportion p = tau, ell = floor(log2(i+1))."""

    name = "F"
    kind = "golden-fractal"

    def __init__(self):
        self._periods: list[list[GoldenNumber]] = [[GoldenNumber(0, 0)]]

    def _period(self, ell: int) -> list[GoldenNumber]:
        while len(self._periods) <= ell:
            prev = self._periods[-1]
            p = TAU
            q = GoldenNumber(1, -1)  # 1 - tau = tau^2
            nxt = [p * x for x in prev] + [p + q * x for x in prev]
            self._periods.append(nxt)
        return self._periods[ell]

    def element(self, i: int) -> GoldenNumber:
        if i < 0:
            raise IndexError("mold indices start at 0")
        ell = (i + 1).bit_length() - 1
        n = i + 1 - (1 << ell)
        return ell + self._period(ell)[n]

    def spacing_index(self, m: int) -> tuple[int, str]:
        if m < 1:
            raise ValueError("multiplicity must be >= 1")
        bound = Fraction(1, m)
        ell = 1
        power = TAU
        while not power < bound:  # largest first-period proportion is tau
            ell += 1
            power = power * TAU
        return (1 << ell) - 1, f"tau^{ell} < 1/{m}, gap bound in periods >= {ell}"


class FractalMold(Mold):
    """Fractal mold generated from a first period by proportional subdivision.

    Period k+1 is built from period k by cutting each gap (consecutive pair,
    with sentinel 1) at the first-period proportions.
    """

    def __init__(self, period: PeriodSpec, name: str = ""):
        if period.granularity < 2:
            raise ValueError("fractal generation needs granularity >= 2")
        self.spec = period
        l = period.granularity
        self.name = name or f"fractal[{l}]"
        self.kind = f"generic-fractal(granularity {l})"
        self._offsets = [period.offsets()]

    def _one(self):
        return self.spec.cuts[0]  # exact 1 in the working family

    def _period(self, ell: int) -> list:
        if ell == 0:
            zero = self.spec.cuts[0] - 1
            return [zero]
        while len(self._offsets) < ell:
            prev = self._offsets[-1]
            base = self.spec.offsets()
            one = self._one()
            nxt = []
            for r, left in enumerate(prev):
                right = prev[r + 1] if r + 1 < len(prev) else one
                width = right - left
                for o in base:
                    nxt.append(left + o * width)
            self._offsets.append(nxt)
        return self._offsets[ell - 1]

    def start_index(self, ell: int) -> int:
        l = self.spec.granularity
        return ((l ** ell) - 1) // (l - 1)

    def element(self, i: int):
        if i < 0:
            raise IndexError("mold indices start at 0")
        if i == 0:
            return self.spec.cuts[0] - 1
        l = self.spec.granularity
        ell = 1
        while self.start_index(ell + 1) <= i:
            ell += 1
        n = i - self.start_index(ell)
        return ell + self._period(ell)[n]

    def max_proportion(self):
        offs = self.spec.offsets() + [self._one()]
        best = offs[1] - offs[0]
        for left, right in zip(offs[1:], offs[2:]):
            gap = right - left
            if best < gap:
                best = gap
        return best

    def spacing_index(self, m: int) -> tuple[int, str]:
        if m < 1:
            raise ValueError("multiplicity must be >= 1")
        rho = self.max_proportion()
        bound = Fraction(1, m)
        ell = 1
        power = rho
        while not power < bound:
            ell += 1
            power = power * rho
        return self.start_index(ell), f"rho^{ell} < 1/{m} with rho the largest first-period gap"


class PerfectFractalMold(Mold):
    """Perfect fractal mold of granularity l: period k is {k + j/l^k : 0 <= j < l^k}."""

    def __init__(self, granularity: int):
        if granularity < 2:
            raise ValueError("granularity must be >= 2")
        self.granularity = granularity
        self.name = f"perfect[{granularity}]"
        self.kind = f"perfect-fractal({granularity})"

    def start_index(self, ell: int) -> int:
        l = self.granularity
        return ((l ** ell) - 1) // (l - 1)

    def element(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("mold indices start at 0")
        if i == 0:
            return Fraction(0)
        ell = 1
        while self.start_index(ell + 1) <= i:
            ell += 1
        j = i - self.start_index(ell)
        return ell + Fraction(j, self.granularity ** ell)

    def spacing_index(self, m: int) -> tuple[int, str]:
        if m < 1:
            raise ValueError("multiplicity must be >= 1")
        l = self.granularity
        k = 1
        while l ** k <= m:
            k += 1
        return self.start_index(k), f"{l}^{k} > {m}, period-{k} step is {l}^-{k}"


class HalvingStepMold(Mold):
    """Granularity-4 mold whose period i steps by 2^-(i+1): 0, 1, 1.25, ..., 2, 2.125, ..."""

    name = "Q"
    kind = "explicit(list rule)"

    @staticmethod
    def start_index(period: int) -> int:
        if period == 0:
            return 0
        return (1 << (period + 1)) - 3  # 1 + sum of 2^(j+1), j = 1..period-1

    def element(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("mold indices start at 0")
        if i == 0:
            return Fraction(0)
        period = 1
        while self.start_index(period + 1) <= i:
            period += 1
        j = i - self.start_index(period)
        return period + Fraction(j, 1 << (period + 1))

    def spacing_index(self, m: int) -> tuple[int, str]:
        if m < 1:
            raise ValueError("multiplicity must be >= 1")
        period = 1
        while (1 << (period + 1)) <= m:
            period += 1
        return self.start_index(period), f"2^{period + 1} > {m}, period-{period} step is 2^-{period + 1}"


class ExplicitMold(Mold):
    """A finite explicit prefix; no spacing certificate."""

    def __init__(self, values: Sequence[ExactValue], name: str = "explicit"):
        self._values = list(values)
        self.name = name
        self.kind = "explicit(list rule)"

    def element(self, i: int):
        if not 0 <= i < len(self._values):
            raise IndexError("index beyond the explicit prefix")
        return self._values[i]


def metric_mold() -> MetricMold:
    return MetricMold()


def golden_fractal_mold() -> GoldenFractalMold:
    return GoldenFractalMold()


def perfect_fractal_mold(granularity: int) -> PerfectFractalMold:
    return PerfectFractalMold(granularity)


def fractal_mold(period: PeriodSpec, name: str = "") -> FractalMold:
    return FractalMold(period, name)


def golden_period_spec() -> PeriodSpec:
    return PeriodSpec([GoldenNumber(1, 0), GoldenNumber(1, 1)])


def mold_q() -> HalvingStepMold:
    return HalvingStepMold()


def mold_d() -> PerfectFractalMold:
    d = PerfectFractalMold(10)
    d.name = "D"
    return d


def _closure_check(values: list, prefix_bound: int, prop: str) -> PropertyReport:
    """Closure of the value list under addition, for sums inside the range."""
    index_of = {v: k for k, v in enumerate(values)}
    top = values[-1]
    for i in range(prefix_bound):
        vi = values[i]
        for j in range(i, prefix_bound):
            s = vi + values[j]
            if top < s:
                break
            if s not in index_of:
                return PropertyReport(prop, "fails", prefix_bound, (i, j),
                                      f"mu_{i} + mu_{j} = {s} is not an element")
    return PropertyReport(prop, "holds-on-prefix", prefix_bound)


def check_mold_axioms(mold: Mold, count: int,
                      gap_epsilon: Optional[Fraction] = None) -> PropertyReport:
    """Zero start, strict monotonicity and closure on the first `count` elements.

    The vanishing-gap axiom is a limit statement; with `gap_epsilon` given,
    its finite stand-in is checked too: every gap inside the last complete
    unit interval covered by the prefix must be below epsilon.
    """
    values = mold.elements(count)
    if values[0] != 0:
        return PropertyReport("mold-axioms", "fails", count, (0,), "mu_0 is not 0")
    for i in range(count - 1):
        if not values[i] < values[i + 1]:
            return PropertyReport("mold-axioms", "fails", count, (i, i + 1),
                                  "sequence is not strictly increasing")
    if gap_epsilon is not None:
        cell = exact_floor(values[-1]) - 1
        inside = [i for i, v in enumerate(values) if cell <= exact_floor(v) < cell + 1]
        for i in inside:
            if i + 1 < count and not _gap_strictly_below(values[i], values[i + 1], gap_epsilon):
                return PropertyReport("mold-axioms", "fails", count, (i, i + 1),
                                      f"gap at index {i} is not below {gap_epsilon}")
    return _closure_check(values, count, "mold-axioms")


def _gap_strictly_below(a, b, eps: Fraction) -> bool:
    """Certified check that b - a < eps; log values go through enclosures."""
    if not (isinstance(a, LogValue) or isinstance(b, LogValue)):
        return b - a < eps
    ca, cb = CertifiedApprox(a), CertifiedApprox(b)
    for _ in range(12):
        if cb.upper - ca.lower < eps:
            return True
        if not cb.lower - ca.upper < eps:
            return False
        ca.refine()
        cb.refine()
    return False


def generic_fractal_mold(period: PeriodSpec, count: int) -> tuple[list, PropertyReport]:
    """Generate a fractal mold from its first period and closure-check it.

    Generation runs to the end of the period containing element count-1, so
    full periods are always compared.  Returns (elements, report); failures
    carry the smallest lexicographic witness pair of element indices.
    """
    mold = FractalMold(period)
    ell = 1
    while mold.start_index(ell + 1) < count:
        ell += 1
    total = mold.start_index(ell + 1)
    values = mold.elements(total)
    report = _closure_check(values, total, "fractal")
    return values, report


def check_metric(mold: Mold, bound: int) -> PropertyReport:
    """mu_(a*b-1) == mu_(a-1) + mu_(b-1) for all 2 <= a <= b with a*b - 1 <= bound."""
    values = mold.elements(bound + 1)
    a = 2
    while a * a - 1 <= bound:
        b = a
        while a * b - 1 <= bound:
            if values[a * b - 1] != values[a - 1] + values[b - 1]:
                return PropertyReport("metric", "fails", bound, (a, b),
                                      f"mu_{a * b - 1} != mu_{a - 1} + mu_{b - 1}")
            b += 1
        a += 1
    return PropertyReport("metric", "holds-on-prefix", bound)


def check_even_filterable_mold(mold: Mold, bound: int) -> PropertyReport:
    """Sums of two even-index elements must land on even indices.

    Checked for all even pairs i <= j <= bound whose sum stays inside the
    generated range.
    """
    values = mold.elements(bound + 1)
    index_of = {v: k for k, v in enumerate(values)}
    top = values[-1]
    for i in range(0, bound + 1, 2):
        vi = values[i]
        for j in range(i, bound + 1, 2):
            s = vi + values[j]
            if top < s:
                break
            k = index_of.get(s)
            if k is None:
                return PropertyReport("even-filterable", "fails", bound, (i, j),
                                      f"mu_{i} + mu_{j} = {s} is not an element")
            if k % 2 == 1:
                return PropertyReport("even-filterable", "fails", bound, (i, j),
                                      f"mu_{i} + mu_{j} = mu_{k} has odd index {k}")
    return PropertyReport("even-filterable", "holds-on-prefix", bound)


def check_fractal(mold: Mold, periods: int, gap: Fraction = Fraction(1, 10 ** 9)) -> PropertyReport:
    """Does the mold's subdivision structure reproduce itself?

    Period k+1 must equal period k refined at the first-period proportions.
    Rational and golden elements are compared exactly; log values have no
    exact differences or products, so those go through certified enclosures:
    a proven separation fails, agreement within `gap` passes on this prefix.
    """
    values = []
    i = 0
    while True:
        v = mold.element(i)
        if not v < periods + 1:
            break
        values.append(v)
        i += 1
    bound = i
    grouped: list[list] = [[] for _ in range(periods + 1)]
    for v in values:
        grouped[exact_floor(v)].append(v)
    if len(grouped[0]) != 1 or len(grouped[1]) < 2:
        return PropertyReport("fractal", "fails", bound, (0,),
                              "need one element in period 0 and granularity >= 2")
    exact = not any(isinstance(v, LogValue) for v in values)
    base = [c - 1 for c in grouped[1]]
    l = len(base)
    for k in range(1, periods):
        actual = [v - (k + 1) for v in grouped[k + 1]]
        prev = [v - k for v in grouped[k]]
        if len(actual) != l * len(prev):
            return PropertyReport("fractal", "fails", bound, (k + 1,),
                                  f"period {k + 1} has {len(actual)} elements, expected {l * len(prev)}")
        pos = 0
        for r, left in enumerate(prev):
            right = prev[r + 1] if r + 1 < len(prev) else 1
            for o in base:
                if exact:
                    match = actual[pos] == left + o * (right - left)
                else:
                    match = _certified_subdivision_match(actual[pos], left, o, right, gap)
                if match is False:
                    return PropertyReport(
                        "fractal", "fails", bound, (k + 1, pos),
                        f"period {k + 1} element {pos} differs from the subdivision prediction")
                pos += 1
    return PropertyReport("fractal", "holds-on-prefix", bound)


def _certified_subdivision_match(actual, left, o, right, gap: Fraction) -> Optional[bool]:
    """Compare actual against left + o*(right - left) through enclosures.

    True is never returned: enclosures only ever prove separation (False)
    or leave the pair indistinguishable at width `gap` (None).
    """
    boxes = {name: CertifiedApprox(v)
             for name, v in (("a", actual), ("x", left), ("o", o), ("y", right))}
    for _ in range(10):
        a = boxes["a"]
        w = (boxes["y"].lower - boxes["x"].upper, boxes["y"].upper - boxes["x"].lower)
        prod = _iv_mul((boxes["o"].lower, boxes["o"].upper), w)
        lo_pred = boxes["x"].lower + prod[0]
        hi_pred = boxes["x"].upper + prod[1]
        if a.upper < lo_pred or hi_pred < a.lower:
            return False
        if (hi_pred - lo_pred) < gap and a.width < gap:
            return None
        for box in boxes.values():
            box.refine()
    return None


def _iv_mul(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    products = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return (min(products), max(products))


@dataclass(frozen=True)
class UniquenessCertificate:
    """Exact evidence that tau is the only granularity-2 proportion in (1/2, 1).

    The closure constraint 2*(1+p) in M forces one of three polynomials to
    vanish; each factors over the integers, and only p^2 + p - 1 has a root
    strictly between 1/2 and 1, namely tau.
    """

    root: GoldenNumber
    root_satisfies_quadratic: bool
    root_in_open_interval: bool
    factorizations: tuple  # ((cubic, factors), ...) as coefficient tuples
    factorizations_verified: bool
    alternative_roots_excluded: bool


def _poly_mul(p: tuple, q: tuple) -> tuple:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def uniqueness_certificate() -> UniquenessCertificate:
    # coefficient tuples are little-endian: (c0, c1, c2, ...)
    quad = (-1, 1, 1)  # p^2 + p - 1
    cubic_a = (1, -2, 0, 1)  # p^3 - 2p + 1
    cubic_b = (1, -2, 1)  # p^2 - 2p + 1
    cubic_c = (-1, 2, -2, 1)  # p^3 - 2p^2 + 2p - 1
    linear = (-1, 1)  # p - 1
    no_real = (1, -1, 1)  # p^2 - p + 1, negative discriminant
    facts = (
        (cubic_a, (quad, linear)),
        (cubic_b, (linear, linear)),
        (cubic_c, (no_real, linear)),
    )
    verified = all(_poly_mul(f1, f2) == cubic for cubic, (f1, f2) in facts)
    tau_quad = TAU * TAU + TAU - 1 == 0
    tau_interval = golden_compare(TAU, Fraction(1, 2)) > 0 and golden_compare(TAU, 1) < 0
    # the quadratic is strictly increasing on (1/2, 1) and changes sign there;
    # (p-1)^2 and p^2 - p + 1 have no root in the open interval
    quad_signs = (Fraction(-1, 4) < 0) and (Fraction(1) > 0)
    disc_negative = (-1) ** 2 - 4 * 1 * 1 < 0
    other = quad_signs and disc_negative
    return UniquenessCertificate(
        root=TAU,
        root_satisfies_quadratic=tau_quad,
        root_in_open_interval=tau_interval,
        factorizations=facts,
        factorizations_verified=verified,
        alternative_roots_excluded=other,
    )


@dataclass(frozen=True)
class ScanResult:
    grid_step: Fraction
    prefix: int
    tolerance: Fraction
    survivors: tuple  # grid proportions passing both axiom sieves
    violations: tuple  # (p, worst closure violation) for each survivor
    degenerate: tuple  # grid proportions whose prefix gaps fall below tolerance
    certificate: UniquenessCertificate


def period_uniqueness_scan(grid_step: Fraction, prefix: int,
                           tolerance: Optional[Fraction] = None) -> ScanResult:
    """Scan granularity-2 periods {1, 1+p} for p on a rational grid in (0,1), p != 1/2.

    Each grid point generates its first `prefix` elements and must pass both
    mold axioms at tolerance resolution: consecutive elements separated by
    more than `tolerance` (as p nears 0 or 1 the sequence collapses toward
    the integers and every sum lands near an element, so closure alone
    cannot reject the degenerate endpoints), and every pairwise sum inside
    the generated range within `tolerance` of an element.  The default
    tolerance is the grid step.  p = 1/2 is excluded: its period generates
    the perfect halving mold, which really is closed.  The exact certificate
    pins the unique surviving proportion, tau, independently of the sieve.
    """
    grid_step = Fraction(grid_step)
    if not 0 < grid_step < Fraction(1, 10):
        raise ValueError("grid step must lie in (0, 0.1)")
    if prefix < 8:
        raise ValueError("prefix must be at least 8")
    tol = Fraction(tolerance) if tolerance is not None else grid_step
    half = Fraction(1, 2)
    survivors = []
    violations = []
    degenerate = []
    k = 1
    while k * grid_step < 1:
        p = k * grid_step
        k += 1
        if p == half:
            continue
        values = FractalMold(PeriodSpec([Fraction(1), 1 + p])).elements(prefix)
        if any(b - a <= tol for a, b in zip(values, values[1:])):
            degenerate.append(p)
            continue
        worst = _worst_closure_violation(values)
        if worst <= tol:
            survivors.append(p)
            violations.append((p, worst))
    return ScanResult(grid_step, prefix, tol, tuple(survivors), tuple(violations),
                      tuple(degenerate), uniqueness_certificate())


def _worst_closure_violation(values: list) -> Fraction:
    present = set(values)
    top = values[-1]
    n = len(values)
    worst = Fraction(0)
    for i in range(n):
        vi = values[i]
        for j in range(i, n):
            s = vi + values[j]
            if top < s:
                break
            if s in present:
                continue
            pos = bisect.bisect_left(values, s)
            dist = s - values[pos - 1]
            if pos < n and values[pos] - s < dist:
                dist = values[pos] - s
            if dist > worst:
                worst = dist
    return worst
