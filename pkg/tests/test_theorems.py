"""Simultaneous-discretization search, censuses, tail certificate, uniqueness."""

from fractions import Fraction

import pytest

from welltempered.discretize import discretize
from welltempered.exactnum import GoldenNumber, LogValue
from welltempered.molds import golden_fractal_mold, metric_mold
from welltempered.semigroups import from_discretization
from welltempered.theorems import (
    EVEN_FILTERABLE_MULTIPLICITIES,
    FEASIBLE_MULTIPLICITIES,
    REFERENCE_MATCHES,
    TailCertificate,
    h_uniqueness,
    multiplicity_census,
    even_filterable_census,
    simultaneous_search,
    tail_certificate,
)

L = metric_mold()
F = golden_fractal_mold()

H_PREFIX = (0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43)

# match counts per multiplicity, fixed by the two alpha sweeps
MATCH_COUNTS = {1: 4, 2: 5, 3: 3, 4: 5, 5: 4, 6: 4, 7: 5, 8: 2, 9: 2,
                10: 4, 11: 0, 12: 1, 13: 3}


def test_census_up_to_20():
    assert multiplicity_census(20) == {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 18}


def test_census_m_max_1():
    assert multiplicity_census(1) == {1}


def test_census_13():
    assert multiplicity_census(13) == {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13}


def test_match_counts_are_deterministic():
    for m, count in MATCH_COUNTS.items():
        assert len(simultaneous_search(m)) == count, m


def test_infeasible_multiplicities_come_back_empty():
    assert simultaneous_search(11) == []
    assert simultaneous_search(14) == []
    assert simultaneous_search(17) == []


def test_matches_carry_verified_data():
    for m in (5, 9, 12):
        matches = simultaneous_search(m)
        lowers = [float(mt.interval_L.lower) for mt in matches]
        assert lowers == sorted(lowers)
        for mt in matches:
            assert mt.m == m
            assert mt.semigroup.element(1) == m
            assert mt.semigroup == from_discretization(mt.interval_L.representative)
            assert mt.semigroup == from_discretization(mt.interval_F.representative)
            assert len(mt.even_filterable) == 2
            for report in mt.even_filterable:
                assert report.verdict in ("holds-on-prefix", "fails")


def test_reference_witnesses_are_recovered():
    # each known alpha pair lands inside a found region pair and the
    # semigroup agrees with the listed leading elements
    for m, ref in REFERENCE_MATCHES.items():
        hits = [mt for mt in simultaneous_search(m)
                if tuple(mt.semigroup.elements_below(ref.prefix[-1] + 1)) == ref.prefix
                and mt.interval_L.contains_alpha(ref.alpha_L)
                and mt.interval_F.contains_alpha(ref.alpha_F)]
        assert hits, m


def test_m12_unique_match_is_h():
    matches = simultaneous_search(12)
    assert len(matches) == 1
    mt = matches[0]
    assert mt.semigroup.prefix == H_PREFIX
    assert mt.semigroup.conductor == 45
    assert mt.interval_L.lower == LogValue(12, 17, -49)
    assert mt.interval_L.upper == LogValue(12, 13, -44)
    assert mt.interval_F.upper == Fraction(1)
    assert mt.interval_F.lower == GoldenNumber(-51, 84)
    assert abs(float(mt.interval_F.lower) - 0.9148551) < 1e-6
    assert all(report.holds for report in mt.even_filterable)


def test_m13_two_semigroups_both_fail_even_filterability():
    matches = simultaneous_search(13)
    sets = {(mt.semigroup.prefix, mt.semigroup.conductor) for mt in matches}
    assert len(sets) == 2
    assert {c for _, c in sets} == {54, 55}
    for mt in matches:
        for report in mt.even_filterable:
            assert report.verdict == "fails"
            assert report.witness == (2, 4)
            assert "52" in report.detail and "s_15" in report.detail


def test_m9_exclusion_witness():
    for mt in simultaneous_search(9):
        report = mt.even_filterable[0]
        assert report.verdict == "fails"
        assert report.witness == (2, 2)
        assert "30 is s_9" in report.detail


def test_even_filterable_census_13():
    assert even_filterable_census(13) == {1, 2, 3, 4, 5, 6, 7, 8, 10, 12}


def test_census_constants_are_consistent():
    assert EVEN_FILTERABLE_MULTIPLICITIES < FEASIBLE_MULTIPLICITIES
    assert set(REFERENCE_MATCHES) == set(FEASIBLE_MULTIPLICITIES)
    for ref in REFERENCE_MATCHES.values():
        assert ref.prefix[0] == 0
        assert 0 < ref.alpha_L <= 1 and 0 < ref.alpha_F <= 1


def test_tail_certificate_range():
    for m in range(35, 201):
        cert = tail_certificate(m)
        assert isinstance(cert, TailCertificate)
        assert cert.anchor == 2 * m
        assert cert.comparison == "greater"
    assert tail_certificate(1000).anchor == 2000


def test_tail_certificate_rejects_search_territory():
    with pytest.raises(ValueError):
        tail_certificate(34)
    with pytest.raises(ValueError):
        tail_certificate(0)


def test_validation():
    with pytest.raises(ValueError):
        simultaneous_search(0)
    with pytest.raises(ValueError):
        simultaneous_search(True)
    with pytest.raises(ValueError):
        multiplicity_census(0)
    with pytest.raises(ValueError):
        even_filterable_census(-2)


def test_h_uniqueness_report():
    rep = h_uniqueness()
    assert rep.semigroup.prefix == H_PREFIX
    assert rep.semigroup.conductor == 45
    assert rep.collapse_record.kappa == 55
    assert rep.collapse_record.witness_index == 22
    assert [st.constraint for st in rep.trace] == [
        "shared-fourth-element",
        "second-element-forced",
        "doubling-the-second-element",
    ]
    assert all(st.satisfied for st in rep.trace)
    assert "0.8631" in rep.trace[0].bound and "0.5836" in rep.trace[0].bound
    assert rep.trace[1].bound == "s_2 = 19"
    assert "0.8328" in rep.trace[2].bound


def test_match_semigroup_membership_spot_checks():
    # the m=18 candidate contains 58 and 87 but not 59
    mt = simultaneous_search(18)[0]
    assert 58 in mt.semigroup and 87 in mt.semigroup
    assert 59 not in mt.semigroup
    assert mt.semigroup.element(2) == 29
    # its even-filterability fails because 29 + 58 = 87 has odd index
    report = mt.even_filterable[0]
    assert report.verdict == "fails"
    assert report.witness == (2, 8)
    assert "87" in report.detail and "s_27" in report.detail


def test_searches_agree_with_direct_discretization():
    # reference alpha pairs rebuild the same sets through discretize alone
    for m in (3, 6, 10):
        ref = REFERENCE_MATCHES[m]
        dl = from_discretization(discretize(L, m, ref.alpha_L))
        df = from_discretization(discretize(F, m, ref.alpha_F))
        assert dl == df
        assert tuple(dl.elements_below(ref.prefix[-1] + 1)) == ref.prefix
