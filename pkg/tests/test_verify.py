"""Min-shadow sweeps, the dual verification routes, the univariate predicate."""

import pytest

import oracles
from colorquot import (
    INF,
    Budget,
    BudgetExceeded,
    RingSpec,
    lower_shadow,
    min_shadow_oracle,
    revlex_segment,
    truncated_univariate_predicate,
    verify_macaulay_lex,
)


def test_min_shadow_frozen_example():
    spec = RingSpec((1, 1), (2, 2))
    assert [min_shadow_oracle(spec, 2, k) for k in range(5)] == [0, 2, 3, 4, 4]


def test_min_shadow_matches_brute_force():
    for spec in (RingSpec((2, 1), (1, 2)), RingSpec((INF,), (3,)), RingSpec((2,), (2,), (1, 2))):
        for d in (1, 2, 3):
            P = len(oracles.piece(spec.a, spec.lam, spec.phi, d))
            for k in range(P + 1):
                got = min_shadow_oracle(spec, d, k)
                want = oracles.min_lower_shadow(spec.a, spec.lam, spec.phi, d, k)
                if want is None:
                    want = 0 if k == 0 else want
                assert got == want, (spec, d, k)


def test_min_shadow_errors():
    spec = RingSpec((1, 1), (2, 2))
    with pytest.raises(ValueError):
        min_shadow_oracle(spec, 0, 0)
    with pytest.raises(ValueError):
        min_shadow_oracle(spec, 2, 9)
    with pytest.raises(BudgetExceeded):
        min_shadow_oracle(spec, 2, 1, Budget(piece_limit=2))
    with pytest.raises(BudgetExceeded):
        min_shadow_oracle(spec, 2, 1, Budget(max_evals=3))


def test_verify_refutes_decreasing_type():
    report = verify_macaulay_lex(RingSpec((2, 1), (1, 1)), 3)
    assert report.verdict == "Refuted"
    assert report.route == "lower-revlex"
    w = report.witness
    assert (w.degree, w.size) == (2, 1)
    assert (w.min_shadow, w.segment_shadow) == (1, 2)
    assert {str(m) for m in w.space} == {"x[1,1]^2"}
    assert report.evals > 0


def test_verify_passes_mixed_ring():
    report = verify_macaulay_lex(RingSpec((1, 1, 1), (2, 2, 3)), 4)
    assert report.verdict == "Verified-up-to-budget"
    assert report.witness is None and report.truncation is None
    # the degree-4 piece is empty (total degree caps at 3) so the scan ends at 3
    assert report.degree_range == (1, 3)
    assert report.evals == 69760


def test_verify_refutes_multicolor_tail():
    report = verify_macaulay_lex(RingSpec((1, 2), (1, 2)), 3)
    assert report.verdict == "Refuted"
    assert (report.witness.degree, report.witness.size) == (2, 3)


def test_verify_upper_route_on_truncation():
    report = verify_macaulay_lex(RingSpec((2,), (2,), (1, 2)), 2)
    assert report.route == "upper-lex"
    assert report.verdict == "Refuted"
    w = report.witness
    assert (w.degree, w.size) == (1, 1)
    assert (w.min_shadow, w.segment_shadow) == (1, 2)
    assert {str(m) for m in w.space} == {"x[1,1]^1"}
    assert report.degree_range[0] == 0


def test_verify_budget_truncation():
    report = verify_macaulay_lex(RingSpec((1, 1, 1), (2, 2, 3)), 4, Budget(piece_limit=3))
    assert report.verdict == "Verified-up-to-budget"
    assert report.truncation is not None
    assert report.truncation.degree == 1
    assert "exceeds the sweep limit" in report.truncation.reason
    report = verify_macaulay_lex(RingSpec((1, 1, 1), (2, 2, 3)), 4, Budget(max_evals=100))
    assert report.truncation is not None and "evaluations" in report.truncation.reason


def test_verify_stops_at_empty_piece():
    report = verify_macaulay_lex(RingSpec((1,), (1,)), 6)
    assert report.verdict == "Verified-up-to-budget"
    assert report.degree_range == (1, 1)


def test_witness_actually_beats_segment():
    report = verify_macaulay_lex(RingSpec((1, 2), (1, 2)), 3)
    w = report.witness
    seg = revlex_segment(report.spec, w.degree, w.size)
    assert lower_shadow(w.space).size == w.min_shadow
    assert lower_shadow(seg).size == w.segment_shadow
    assert w.min_shadow < w.segment_shadow


def test_univariate_predicate_examples():
    assert truncated_univariate_predicate(2, (1, 2))
    assert not truncated_univariate_predicate(2, (2, 1))
    assert truncated_univariate_predicate(INF, (3, 3, 3))
    assert truncated_univariate_predicate(1, (2, 1))
    with pytest.raises(ValueError):
        truncated_univariate_predicate(0, (1,))
    with pytest.raises(ValueError):
        truncated_univariate_predicate(2, ())


def test_predicate_matches_ring_verification():
    # alpha is indexed by descending variables, phi by ascending; reverse to glue
    cases = [
        (2, (1, 2)),
        (2, (2, 1)),
        (3, (1, 2, 2)),
        (3, (2, 2, 1)),
        (INF, (2, 1)),
    ]
    for a, phi in cases:
        spec = RingSpec((a,), (len(phi),), phi)
        pred = truncated_univariate_predicate(a, tuple(reversed(phi)))
        report = verify_macaulay_lex(spec, 4)
        assert (report.verdict == "Refuted") == (not pred), (a, phi)
