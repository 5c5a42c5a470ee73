import json

import pytest

from totaldom import (
    DomainTooLarge,
    FamilySpec,
    Graph,
    TheoremId,
    VerificationReport,
    gamma,
    gamma_t,
    parse_family_range,
    scan_bound_claims,
    sweep,
    sweep_csv,
    verify,
)
from totaldom.bounds import path_cycle_formula
from totaldom.verify import SWEEP_COLUMNS, _combos, _cover_value, random_graph_specs

from conftest import edge_mask_graphs


def test_theorem_ids_closed_enumeration():
    assert [t.value for t in TheoremId] == [
        "cockayne_upper",
        "connected_upper",
        "n_over_delta_lower",
        "diam2_upper",
        "girth_upper",
        "sandwich",
        "path_cycle_formula",
        "bipartite_extremal",
        "tree_star",
        "circular_two",
        "circular_three",
    ]


class TestScanAgreesWithSolvers:
    def test_cover_value_matches_public_api(self):
        # the enumeration hot path must equal the exhaustive solver
        for n in range(2, 6):
            combos = _combos(n)
            full = (1 << n) - 1
            for _, edges in edge_mask_graphs(n):
                g = Graph(n, edges)
                res = gamma_t(g)
                if res is None:
                    continue
                assert _cover_value(list(g.adj_masks), full, combos) == res.value
                closed = [a | (1 << v) for v, a in enumerate(g.adj_masks)]
                assert _cover_value(closed, full, combos) == gamma(g).value


class TestScan:
    def test_jobs_do_not_change_results(self):
        claims = ("cockayne_upper", "sandwich")
        a = scan_bound_claims(range(1, 6), claims, jobs=1)
        b = scan_bound_claims(range(1, 6), claims, jobs=2)
        assert a == b

    def test_unknown_claim(self):
        with pytest.raises(ValueError):
            scan_bound_claims([3], ("unheard_of",))

    def test_counts_match_filterless_expectations(self):
        res = scan_bound_claims([4], ("cockayne_upper",), jobs=1)
        count, cex = res["cockayne_upper"]
        # graphs on 4 vertices without isolated vertices
        expected = sum(
            1 for _, edges in edge_mask_graphs(4)
            if all(any(v in e for e in edges) for v in range(4))
        )
        assert count == expected
        assert cex == []


class TestVerifyArms:
    def test_path_cycle_quick(self):
        r = verify(TheoremId.PATH_CYCLE_FORMULA, "quick")
        assert r.verdict == "PASS"
        assert r.instances_checked == 36

    def test_circular_two_quick_grid_size(self):
        r = verify(TheoremId.CIRCULAR_TWO, "quick")
        assert r.verdict == "PASS"
        assert r.instances_checked == sum(
            36 - (4 * d - 2) + 1 for d in range(3, 7)
        ) == 84

    def test_circular_three_quick(self):
        r = verify(TheoremId.CIRCULAR_THREE, "quick")
        assert r.verdict == "PASS"
        assert r.instances_checked == sum(
            (4 * d - 3) - 3 * d + 1 for d in range(3, 7)
        ) == 10

    def test_girth_arm_quick(self):
        r = verify(TheoremId.GIRTH_UPPER, "quick")
        assert r.verdict == "PASS"
        # labeled 5-cycles and 6-cycles are the only qualifying graphs at n <= 6
        assert r.instances_checked >= 72

    def test_reports_deterministic(self):
        a = verify(TheoremId.DIAM2_UPPER, "quick", jobs=2)
        b = verify(TheoremId.DIAM2_UPPER, "quick", jobs=1)
        assert a.to_json_dict() == b.to_json_dict()

    def test_invalid_scale(self):
        with pytest.raises(ValueError):
            verify(TheoremId.SANDWICH, "huge")

    def test_json_schema(self):
        r = verify(TheoremId.PATH_CYCLE_FORMULA, "quick")
        payload = r.to_json_dict()
        assert set(payload) == {"theorem", "verdict", "instances", "counterexamples"}
        assert payload["verdict"] == "PASS"
        with_elapsed = r.to_json_dict(include_elapsed=True)
        assert "elapsed_ms" in with_elapsed
        json.dumps(with_elapsed)

    def test_verify_all_runs_every_claim_in_order(self):
        from totaldom import verify_all

        reports = verify_all("quick", jobs=2)
        assert [r.theorem for r in reports] == list(TheoremId)
        assert all(r.verdict == "PASS" for r in reports)

    def test_verdict_fail_on_counterexamples(self):
        r = VerificationReport(
            theorem=TheoremId.SANDWICH,
            domain="synthetic",
            instances_checked=1,
            counterexamples=[{"instance": {"n": 2, "edges": []}, "detail": {}}],
            elapsed_seconds=0.0,
        )
        assert r.verdict == "FAIL"


class TestRandomDomains:
    def test_specs_are_committed_and_stable(self):
        specs = random_graph_specs(5)
        assert [str(s) for s in specs] == [
            "random:n=2,p=0.2,seed=1592590337",
            "random:n=3,p=0.3,seed=1592590338",
            "random:n=4,p=0.5,seed=1592590339",
            "random:n=5,p=0.2,seed=1592590340",
            "random:n=6,p=0.3,seed=1592590341",
        ]

    def test_sizes_capped(self):
        assert all(s.n <= 16 for s in random_graph_specs(500))


class TestSweep:
    def test_circular_case_split(self):
        rows = sweep(parse_family_range("circular:d=3,n=6..14"))
        assert len(rows) == 9
        got = {row["n"]: row["gamma_t"] for row in rows}
        assert got["9"] == "3"
        for n in range(10, 15):
            assert got[str(n)] == "2"

    def test_cycle_column_matches_formula(self):
        rows = sweep(parse_family_range("cycle:n=3..10"))
        for row in rows:
            assert int(row["gamma_t"]) == path_cycle_formula("cycle", int(row["n"]))

    def test_star_matching_always_extremal(self):
        rows = sweep(parse_family_range("star+matching:t=2..4,r=0..2"))
        assert len(rows) == 9
        assert all(row["extremal"] == "true" for row in rows)

    def test_budget(self):
        specs = [FamilySpec.parse("path:n=4")] * 10_001
        with pytest.raises(DomainTooLarge):
            sweep(specs)

    def test_jobs_preserve_order(self):
        specs = parse_family_range("cycle:n=3..12")
        assert sweep(specs, jobs=2) == sweep(specs, jobs=1)

    def test_csv_fixed_header(self):
        text = sweep_csv(sweep(parse_family_range("path:n=4")))
        lines = text.splitlines()
        assert lines[0] == ",".join(SWEEP_COLUMNS)
        assert len(lines) == 2

    def test_undefined_gamma_t_left_blank(self):
        # a random spec drawing no edges: p=0
        rows = sweep([FamilySpec.parse("random:n=4,p=0,seed=1")])
        assert rows[0]["gamma_t"] == ""
        assert rows[0]["extremal"] == ""
        assert rows[0]["gamma"] == "4"
