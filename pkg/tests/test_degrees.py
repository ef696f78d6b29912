import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toeplitz import degrees
from toeplitz.core import ToeplitzError, ToeplitzSpec, iter_specs, parse_spec, to_dense
from toeplitz.degrees import RealizabilityReport

from conftest import specs


def test_degree_profile_examples():
    assert degrees.degree_profile(parse_spec("5: 1,2,4")) == (3, 3, 4, 3, 3)
    assert degrees.degree_profile(parse_spec("6: 2,3,4")) == (3,) * 6
    assert degrees.degree_profile(parse_spec("4:")) == (0,) * 4


def test_step_classification_examples():
    fig = parse_spec("5: 1,2,4")
    assert degrees.profile_step_classification(fig, 2) == "up"
    assert degrees.profile_step_classification(fig, 1) == "equal"
    assert degrees.profile_step_classification(fig, 3) == "down"
    reg = parse_spec("6: 2,3,4")
    assert {degrees.profile_step_classification(reg, j) for j in range(1, 6)} == {"equal"}
    with pytest.raises(ToeplitzError):
        degrees.profile_step_classification(fig, 5)


def test_check_profile_examples():
    r = degrees.check_profile((3, 3, 4, 3, 3))
    assert r.realizable and r.s == 1
    assert degrees.check_profile((1, 2, 2, 3, 3, 4)).failed_condition == "b"
    r = degrees.check_profile((2, 2, 2))
    assert r.realizable and r.s == 0


@pytest.mark.parametrize("profile, letter", [
    ((0, 2, 0), "a"),
    ((1, 2, 2, 2), "b"),
    ((0, 1, 1, 0), "c"),
    ((3, 2, 2, 3), "c"),
    ((1, 1, 1), "d"),
])
def test_check_profile_failures(profile, letter):
    report = degrees.check_profile(profile)
    assert not report.realizable and report.failed_condition == letter


def test_check_profile_rejects_garbage():
    for bad in ((), (1, -1), (1.5,), (True, 1)):
        with pytest.raises(ToeplitzError):
            degrees.check_profile(bad)


def test_report_invariant():
    with pytest.raises(ValueError):
        RealizabilityReport(True, 0, failed_condition="a")
    with pytest.raises(ValueError):
        RealizabilityReport(False, 0)


def test_realize_profile_examples():
    report = degrees.realization_report((3, 3, 4, 3, 3))
    assert report.offsets == (1, 2, 4) and report.b3_star == (1,)
    assert degrees.realize_profile((3, 3, 4, 3, 3)) == parse_spec("5: 1,2,4")
    assert degrees.realize_profile((2, 2, 2)) == parse_spec("3: 1,2")
    assert degrees.realize_profile((1, 1)) == parse_spec("2: 1")
    with pytest.raises(ToeplitzError, match=r"condition \(b\)"):
        degrees.realize_profile((1, 2, 2, 3, 3, 4))
    assert json.loads(report.to_json()) == {"realizable": True, "s": 1, "offsets": [1, 2, 4], "failed_condition": None}


def test_realize_sequence_examples():
    arrangement, spec = degrees.realize_sequence([4, 3, 3, 3, 3])
    assert arrangement == (3, 3, 4, 3, 3) and spec.offsets == (1, 2, 4)
    assert degrees.realize_sequence([4, 3, 3, 2, 2, 1, 1]) is None
    assert degrees.realize_sequence([0, 0, 0]) == ((0, 0, 0), ToeplitzSpec(3, ()))
    with pytest.raises(ToeplitzError):
        degrees.realize_sequence([1, 2])


def test_counterexample_not_realized_by_any_graph():
    target = [4, 3, 3, 2, 2, 1, 1]
    specs7 = list(iter_specs(7))
    assert len(specs7) == 63
    assert all(sorted(degrees.degree_profile(s), reverse=True) != target for s in specs7)
    outcome = degrees.search_arrangement(target)
    assert not outcome.realizable and sum(outcome.pruned.values()) > 0


def test_circulant_and_regular_examples():
    assert degrees.is_circulant(parse_spec("6: 2,3,4"))
    assert not degrees.is_circulant(parse_spec("5: 1,2,4"))
    assert degrees.is_circulant(parse_spec("5: 1,2,3,4"))
    assert degrees.is_regular(parse_spec("6: 2,3,4")) == 3
    assert degrees.is_regular(parse_spec("5: 1,2,4")) is None
    assert degrees.is_regular(parse_spec("5:")) == 0


@given(specs(min_n=2, max_n=16))
def test_step_classification_matches_degrees(spec):
    d = degrees.degree_profile(spec)
    sign = {1: "up", 0: "equal", -1: "down"}
    for j in range(1, spec.n):
        assert degrees.profile_step_classification(spec, j) == sign[d[j] - d[j - 1]]


@given(specs(min_n=1, max_n=16, allow_edgeless=True))
def test_regular_iff_circulant(spec):
    assert (degrees.is_regular(spec) is not None) == degrees.is_circulant(spec)
    if degrees.is_circulant(spec):
        has_half = spec.n % 2 == 0 and spec.n // 2 in spec.offset_set
        assert (spec.k % 2 == 1) == has_half


@given(specs(min_n=1, max_n=16, allow_edgeless=True))
def test_profile_round_trip(spec):
    profile = degrees.degree_profile(spec)
    realized = degrees.realize_profile(profile)
    assert degrees.degree_profile(realized) == profile
    g = to_dense(realized, cap=realized.n)
    assert tuple(g.degree(v) for v in range(1, realized.n + 1)) == profile


@st.composite
def walk_profiles(draw):
    """Palindromic profiles with unit steps; may or may not pass (c)/(d)."""
    n = draw(st.integers(1, 14))
    half = (n + 1) // 2
    start = draw(st.integers(0, n - 1))
    vals = [start]
    for _ in range(half - 1):
        vals.append(min(n - 1, max(0, vals[-1] + draw(st.sampled_from((-1, 0, 1))))))
    mirror = vals[: n // 2][::-1]
    return tuple(vals + mirror)


@given(walk_profiles())
def test_passing_profiles_realize_exactly(profile):
    report = degrees.check_profile(profile)
    if report.realizable:
        assert degrees.degree_profile(degrees.realize_profile(profile)) == profile
    else:
        with pytest.raises(ToeplitzError):
            degrees.realize_profile(profile)


@pytest.mark.parametrize("n", range(1, 9))
def test_realize_sequence_matches_enumeration(n):
    realizable = {tuple(sorted(degrees.degree_profile(s), reverse=True)) for s in iter_specs(n, include_edgeless=True)}
    for seq in realizable:
        result = degrees.realize_sequence(seq)
        assert result is not None
        assert tuple(sorted(degrees.degree_profile(result[1]), reverse=True)) == seq
    rng = random.Random(n)
    for _ in range(200):
        seq = tuple(sorted((rng.randrange(n) for _ in range(n)), reverse=True))
        assert (degrees.realize_sequence(seq) is not None) == (seq in realizable)
