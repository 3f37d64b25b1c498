"""Threshold rounding of molds, truncation certificates, alpha sweep."""

import random
from fractions import Fraction

import pytest

from welltempered.exactnum import GoldenNumber, LogValue, exact_frac, rational_between
from welltempered.discretize import (
    AlphaInterval,
    alpha_sweep,
    discretize,
    interval_for_alpha,
    truncation_certificate,
)
from welltempered.molds import (
    ExplicitMold,
    SpacingCertificateError,
    golden_fractal_mold,
    metric_mold,
    mold_q,
)

H_PREFIX = (0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43)

L = metric_mold()
F = golden_fractal_mold()
Q = mold_q()


def test_twelve_tone_set_from_golden_flooring():
    d = discretize(F, 12, 1)
    assert d.prefix == H_PREFIX
    assert d.conductor == 45


def test_twelve_tone_set_from_metric_at_two_fifths():
    d = discretize(L, 12, Fraction(2, 5))
    assert d.prefix == H_PREFIX
    assert d.conductor == 45


def test_metric_twelve_flooring_differs():
    # pure flooring of 12*L is a different set with conductor 48
    d = discretize(L, 12, 1)
    assert d.prefix == (0, 12, 19, 24, 27, 31, 33, 36, 38, 39, 41, 43, 44, 45, 46)
    assert d.conductor == 48
    assert not d.contains(47)
    assert d.contains(48)


def test_sixteen_q_same_under_nearest_and_flooring():
    expected = (0, 16, 20, 24, 28, 32, 34, 36, 38, 40, 42, 44, 46)
    for alpha in (Fraction(1, 2), 1):
        d = discretize(Q, 16, alpha)
        assert d.prefix == expected
        assert d.conductor == 48


def test_nineteen_q_nearest_listing():
    d = discretize(Q, 19, Fraction(1, 2))
    assert d.prefix == (0, 19, 24, 29, 33, 38, 40, 43, 45, 48, 50, 52, 55, 57,
                        58, 59, 61, 62, 63, 64, 65, 67, 68, 69, 70, 71, 72)
    assert d.conductor == 74


def test_nineteen_q_flooring_listing():
    d = discretize(Q, 19, 1)
    assert d.prefix == (0, 19, 23, 28, 33, 38, 40, 42, 45, 47, 49, 52, 54, 57,
                        58, 59, 60, 61, 62, 64, 65, 66, 67, 68, 70, 71, 72, 73, 74)
    assert d.conductor == 76


def test_certificate_metric_twelve():
    cert = truncation_certificate(L, 12)
    assert cert.prefix_end == 16
    assert cert.conductor == 50
    assert "(16+2)^12 < 2*(16+1)^12" in cert.spacing_witness
    # exact form of the boundary inequality
    assert 18 ** 12 < 2 * 17 ** 12
    assert not (17 ** 12 < 2 * 16 ** 12)


def test_certificate_golden_twelve():
    cert = truncation_certificate(F, 12)
    assert cert.prefix_end == 63
    assert cert.conductor == 72
    assert cert.horizon > cert.prefix_end


def test_certificate_q_and_trivial_multiplicity():
    assert truncation_certificate(Q, 16).prefix_end == 29
    assert truncation_certificate(Q, 19).prefix_end == 29
    assert truncation_certificate(L, 1).prefix_end == 1


def test_certificate_rejects_bad_input():
    with pytest.raises(SpacingCertificateError):
        truncation_certificate(ExplicitMold([0, 1, 2], name="X"), 3)
    with pytest.raises(ValueError):
        truncation_certificate(L, 0)
    with pytest.raises(ValueError):
        discretize(L, 12, Fraction(3, 2))


def test_discretization_membership_helpers():
    d = discretize(F, 12, 1)
    assert d.contains(0) and d.contains(43) and d.contains(100)
    assert not d.contains(44) and not d.contains(11)
    assert d.members_below(20) == [0, 12, 19]
    assert d.members_below(47)[-3:] == [43, 45, 46]


def test_sweep_interval_chain_and_count():
    for mold, m in ((L, 11), (F, 12), (Q, 16)):
        sweep = alpha_sweep(mold, m)
        n_end = truncation_certificate(mold, m).prefix_end
        assert len(sweep) <= n_end + 2
        first, last = sweep[0], sweep[-1]
        assert first.lower == 0 and first.upper == 0 and first.is_ceiling_point
        assert last.upper == 1
        assert sweep[1].lower == 0
        for a, b in zip(sweep[1:], sweep[2:]):  # gap-free cover of (0, 1]
            assert a.upper == b.lower


def test_sweep_locates_supplied_alpha():
    sweep = alpha_sweep(F, 12)
    assert interval_for_alpha(sweep, 0).is_ceiling_point
    assert interval_for_alpha(sweep, 1).upper == 1
    iv = interval_for_alpha(sweep, Fraction(2, 5))
    assert iv.contains_alpha(Fraction(2, 5))
    assert not iv.contains_alpha(iv.lower)
    assert iv.contains_alpha(iv.upper)
    with pytest.raises(ValueError):
        interval_for_alpha(sweep, Fraction(3, 2))


def test_golden_twelve_breakpoint_for_element_28():
    # 12 * mu_4 = 36 - 12*tau = 28.5836...; 28 appears exactly when the
    # threshold exceeds its fractional part
    breakpoint = GoldenNumber(8, -12)
    sweep = alpha_sweep(F, 12)
    assert any(iv.upper == breakpoint for iv in sweep)
    for iv in sweep[1:]:
        has_28 = 28 in iv.representative.prefix
        assert has_28 == (not iv.lower < breakpoint)


def test_metric_eleven_element_two_rounds_both_ways():
    # 11 * mu_2 = 11*log2(3) = 17.4346...: large thresholds keep 17, small
    # thresholds push it to 18
    sweep = alpha_sweep(L, 11)
    assert interval_for_alpha(sweep, Fraction(1, 2)).representative.values[2] == 17
    assert interval_for_alpha(sweep, 1).representative.values[2] == 17
    assert interval_for_alpha(sweep, Fraction(1, 10)).representative.values[2] == 18


def test_metric_eighteen_small_threshold_interval():
    sweep = alpha_sweep(L, 18)
    iv = interval_for_alpha(sweep, Fraction(1, 20))
    assert iv.upper == LogValue(18, 9, -57)  # frac(18*log2 9) = 0.0586...
    vals = iv.representative.values
    assert vals[30] == vals[31] == 90


def test_twelve_tone_interval_endpoints():
    swl = alpha_sweep(L, 12)
    ivl = interval_for_alpha(swl, Fraction(2, 5))
    assert ivl.representative.prefix == H_PREFIX
    assert ivl.lower == LogValue(12, 17, -49)
    assert ivl.upper == LogValue(12, 13, -44)
    swf = alpha_sweep(F, 12)
    ivf = interval_for_alpha(swf, 1)
    assert ivf.representative.prefix == H_PREFIX
    assert not ivf.lower < GoldenNumber(-14, 24)  # above frac(12*mu_8)


def _rationals_inside(iv, count, rng):
    lo, hi = float(iv.lower), float(iv.upper)
    out = []
    while len(out) < count:
        cand = Fraction(rng.uniform(lo, hi)).limit_denominator(10 ** 9)
        if iv.contains_alpha(cand):
            out.append(cand)
        else:
            out.append(rational_between(iv.lower, iv.upper))
    return out


def test_constancy_inside_intervals():
    rng = random.Random(411085)
    for mold, m in ((L, 11), (F, 12)):
        sweep = alpha_sweep(mold, m)
        for iv in rng.sample(sweep[1:], 4):
            rep = iv.representative
            for alpha in _rationals_inside(iv, 25, rng):
                d = discretize(mold, m, alpha)
                assert d.prefix == rep.prefix
                assert d.conductor == rep.conductor


def test_crossing_breakpoint_flips_matching_indices():
    for mold, m in ((F, 12), (L, 11)):
        sweep = alpha_sweep(mold, m)
        n_end = sweep[1].representative.prefix_end
        for below, above in zip(sweep[1:], sweep[2:]):
            b = above.lower  # the breakpoint being crossed
            flipped = [i for i in range(n_end + 1)
                       if below.representative.values[i] != above.representative.values[i]]
            assert flipped, (m, float(b))
            for i in flipped:
                assert below.representative.values[i] - above.representative.values[i] == 1
                assert exact_frac(_scaled_element(mold, m, i)) == b


def _scaled_element(mold, m, i):
    mu = mold.element(i)
    if isinstance(mu, LogValue):
        return mu.scaled(m)
    return mu * m


def test_conductor_soundness_with_margin():
    for mold, m in ((L, 11), (F, 12), (Q, 16)):
        for iv in alpha_sweep(mold, m):
            rep = iv.representative
            for n in range(rep.conductor, rep.conductor + 2 * m + 1):
                assert rep.contains(n)


def test_ceiling_minus_floor_is_zero_or_one():
    for mold, m in ((L, 12), (F, 12), (Q, 19)):
        ceilings = discretize(mold, m, 0).values
        floorings = discretize(mold, m, 1).values
        assert all(c - f in (0, 1) for c, f in zip(ceilings, floorings))


def test_values_monotone_with_small_tail_steps():
    for mold, m in ((L, 12), (F, 12), (Q, 19)):
        for alpha in (0, Fraction(1, 3), 1):
            d = discretize(mold, m, alpha)
            assert all(a <= b for a, b in zip(d.values, d.values[1:]))
            tail = d.values[d.prefix_end:]
            assert all(b - a <= 1 for a, b in zip(tail, tail[1:]))


def test_discretize_accepts_interval_argument():
    sweep = alpha_sweep(Q, 16)
    iv = interval_for_alpha(sweep, Fraction(1, 2))
    assert discretize(Q, 16, iv) is iv.representative


def test_multiplicity_is_m_on_every_interval():
    for mold, m in ((L, 11), (F, 12), (Q, 16), (L, 18)):
        for iv in alpha_sweep(mold, m):
            rep = iv.representative
            smallest = rep.prefix[1] if len(rep.prefix) > 1 else rep.conductor
            assert smallest == m


def test_multiplicity_one_gives_all_naturals():
    for mold in (L, F):
        d = discretize(mold, 1, 1)
        assert d.conductor <= 1
        assert d.contains(0) and d.contains(1) and d.contains(2)
