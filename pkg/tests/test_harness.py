"""Verification reports, the suite driver, and winner structure checks."""

import json

import pytest

from hypertree_spectra import (
    InfeasibleParameters,
    SuiteConfig,
    brute_force_counts,
    build_A,
    canonical_code,
    common_vertex,
    default_config,
    enumerate_T_mkr,
    is_pendent_edge,
    hyperstar,
    run_suite,
    verify_extremal,
    verify_perfect_matching,
)

from conftest import path_graph


def test_verify_331():
    report = verify_extremal(3, 2, 3)
    assert report.class_count == 1
    assert abs(report.winner_rho - 1.3782407724892103) < 1e-9
    assert report.unique and report.matches_bound and report.winner_is_construction
    assert report.passed


def test_verify_golden():
    report = verify_extremal(3, 2, 2)
    assert abs(report.winner_rho - 1.6180339887498949) < 1e-9
    assert report.winner_code == canonical_code(path_graph(4))
    assert report.passed


def test_verify_stars():
    for m, r in [(4, 2), (5, 3), (4, 4)]:
        report = verify_extremal(m, 1, r)
        assert report.winner_code == canonical_code(hyperstar(m, r))
        assert abs(report.winner_rho - m ** (1 / r)) < 1e-9
        assert report.passed


def test_verify_infeasible_raises():
    with pytest.raises(InfeasibleParameters):
        verify_extremal(5, 4, 3)


def test_verify_at_least_interpretation():
    report = verify_extremal(4, 2, 3, at_least=True)
    assert report.interpretation == "at-least-nu"
    assert report.passed


def test_verify_perfect_matching_examples():
    report = verify_perfect_matching(2, 2)
    assert report.m == 3
    assert report.winner_code == canonical_code(path_graph(4))
    assert abs(report.winner_rho - 1.618034) < 1e-6
    assert report.passed
    report = verify_perfect_matching(3, 3)
    assert report.m == 4
    assert abs(report.winner_rho - 1.4655712318767682) < 1e-9
    assert report.passed
    with pytest.raises(ValueError):
        verify_perfect_matching(3, 2)  # m = 5/2


def test_winner_matching_structure():
    """Each extremal winner (m >= 2) has a maximum matching of pendent edges,
    and the leftover edges all pass through one vertex."""
    for r, m_max in [(2, 6), (3, 5), (4, 4)]:
        for m in range(2, m_max + 1):
            for k in range(1, m + 1):
                try:
                    report = verify_extremal(m, k, r)
                except InfeasibleParameters:
                    continue
                winner = build_A(m, k, r)
                assert report.winner_code == canonical_code(winner)
                witnesses = _pendent_maximum_matchings(winner, k)
                assert witnesses, (m, k, r)
                assert any(
                    _rest_has_common_vertex(winner, M) for M in witnesses
                ), (m, k, r)


def _pendent_maximum_matchings(H, k):
    """All maximum matchings consisting solely of pendent edges."""
    from itertools import combinations

    assert brute_force_counts(H).nu == k
    out = []
    for subset in combinations(H.edges, k):
        vertices = [v for e in subset for v in e]
        if len(set(vertices)) != len(vertices):
            continue
        if all(is_pendent_edge(H, e) for e in subset):
            out.append(subset)
    return out


def _rest_has_common_vertex(H, matching):
    rest = [e for e in H.edges if e not in set(matching)]
    if not rest:
        return True
    return common_vertex(H, rest) is not None


def test_suite_default_passes(tmp_path):
    config = default_config()
    config.csv_path = str(tmp_path / "report.csv")
    config.json_path = str(tmp_path / "report.json")
    result = run_suite(config)
    assert result.exit_code == 0
    text = (tmp_path / "report.csv").read_text()
    assert text.splitlines()[0] == "m,k,r,q,s,l,classes,winner_code,winner_rho,bound_rho,unique,matches_bound"
    payload = json.loads((tmp_path / "report.json").read_text())
    assert payload["all_passed"] is True


def test_suite_marks_infeasible_not_failure():
    config = SuiteConfig(triples=[(5, 4, 3)])
    result = run_suite(config)
    assert result.exit_code == 0
    row = result.rows[0]
    assert row["winner_code"] == "infeasible"
    assert row["feasible"] is False


def test_suite_empty_config():
    result = run_suite(SuiteConfig())
    assert result.exit_code == 0
    assert result.rows == []
    assert result.csv_text.strip() == "m,k,r,q,s,l,classes,winner_code,winner_rho,bound_rho,unique,matches_bound"


def test_suite_deterministic():
    config = SuiteConfig(ranges=[(3, 4)])
    first = run_suite(config)
    second = run_suite(config)
    assert first.csv_text == second.csv_text
    assert first.json_text == second.json_text


def test_suite_config_json_round_trip(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps(
            {
                "triples": [[3, 2, 3]],
                "ranges": [{"r": 2, "m_max": 3}],
                "at_least": True,
                "bound_tol": 1e-7,
            }
        )
    )
    config = SuiteConfig.load(str(path))
    assert (3, 2, 3) in config.all_triples()
    assert (3, 1, 2) in config.all_triples()
    assert config.at_least is True
    assert config.bound_tol == 1e-7


def test_records_carry_extremal_flag():
    records = list(enumerate_T_mkr(4, 2, 3))
    assert all(not rec.is_extremal for rec in records)
    verify_extremal(4, 2, 3)
