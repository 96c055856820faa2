import itertools
import json

import pytest

from transvect.f2core import SymplecticSpace, VectorSet, rank
from transvect.graphs import graph_of_set, is_claw_free_block_graph
from transvect.groupgen import generate_group, is_symmetric_group
from transvect.harness import (
    SUITES,
    VerificationReport,
    counterexample_instance,
    dependent_claw_free_block_sets,
    dependent_triangle_finding,
    evaluate_characterization,
    form_family,
    independent_sets,
    reproduce_counterexample,
    run_suite,
    verify_characterization,
    verify_graph_recognizers,
    verify_letter_count,
    verify_mutation_invariants,
    verify_tree_constructions,
)
from transvect.instance import parse_instance


def _strip_time(report):
    d = report.to_dict()
    d.pop("wall_time")
    return d


class TestFamilies:
    def test_form_family_contents(self):
        fam = form_family(4, n_random=24, seed=0)
        names = [n for n, _ in fam]
        assert sum(n.startswith("random") for n in names) >= 20
        assert any(n.startswith("path") for n in names)
        assert any(n.startswith("hyp") for n in names)
        grams = [(sp.dim, sp.gram) for _, sp in fam]
        assert len(grams) == len(set(grams))

    def test_form_family_seeded(self):
        assert form_family(4, seed=3) == form_family(4, seed=3)

    def test_independent_sets_brute_force(self):
        for sp in (SymplecticSpace.path_form(3), SymplecticSpace.hyperbolic(1, 1)):
            got = {tuple(sorted(s)) for s in independent_sets(sp, radical_free=False)}
            want = {
                c
                for k in range(1, sp.dim + 1)
                for c in itertools.combinations(range(1, 1 << sp.dim), k)
                if rank(c) == k
            }
            assert got == want
            rad = set(sp.radical())
            free = {tuple(sorted(s)) for s in independent_sets(sp, radical_free=True)}
            # a radical-free set avoids every nonzero vector of rad V
            span = {0}
            for r in rad:
                span |= {x ^ r for x in span}
            assert free == {c for c in want if not set(c) & span}


class TestCharacterization:
    def test_dim3_clean(self):
        rep = verify_characterization(max_dim=3, n_random=6)
        assert rep.ok and rep.checked > 0 and rep.truncations == 0

    def test_evaluate_path_basis(self):
        sp = SymplecticSpace.path_form(4)
        c = evaluate_characterization(sp, VectorSet.standard_basis(sp))
        assert (c["symmetric"], c["claw_free_block"], c["root_tree"], c["path_in_class"]) == (True,) * 4
        assert c["order"] == 120 and c["k"] == 5

    def test_radical_member_is_out_of_hypothesis(self):
        rep = verify_characterization(max_dim=3, n_random=0, include_radical=True)
        assert rep.ok
        assert rep.counters.get("out_of_hypothesis", 0) > 0
        kinds = {f["kind"] for f in rep.findings}
        assert kinds <= {"out_of_hypothesis"}

    def test_radical_pair_example(self):
        # r in rad V and a non-radical beta: Tv is Sym(2) but G(S) is disconnected
        sp = SymplecticSpace.path_form(3)
        vs = VectorSet(sp, [0b101, 0b010])
        g = generate_group(sp, vs)
        assert g.order == 2 and is_symmetric_group(g).k == 2
        assert not is_claw_free_block_graph(graph_of_set(sp, vs))


class TestCounterexample:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_reproduces(self, n):
        rep = reproduce_counterexample(n)
        assert rep.ok
        f = rep.findings[0]
        assert f["k"] == n + 1 and f["classical_conditions"] == (True, True, False, True)

    def test_range(self):
        with pytest.raises(ValueError):
            reproduce_counterexample(2)

    def test_instance(self):
        sp, vs = counterexample_instance(4)
        assert vs.to_strings() == ["1000", "0100", "0010", "0001", "1100"]


class TestLetterCount:
    def test_dim3(self):
        rep = verify_letter_count(max_dim=3, n_random=4, exploratory=False)
        assert rep.ok and rep.agreements > 0

    def test_dependent_exploration_dim2(self):
        sp = SymplecticSpace.hyperbolic(1)
        sets = list(dependent_claw_free_block_sets(sp))
        assert sets == [(1, 2, 3)]

    def test_triangle_finding(self):
        f = dependent_triangle_finding()
        assert f["order"] == 6 and f["symmetric_k"] == 3
        assert f["claw_free_block"] is True and f["graph_order"] == 3
        assert f["independent"] is False
        assert f["hypothesis"] == "outside independence hypothesis"
        assert f["stated_order"] == 24


def test_graph_recognizers_small():
    rep = verify_graph_recognizers(max_vertices=4)
    assert rep.ok and rep.checked == 1 + 2 + 8 + 64


def test_tree_constructions_small():
    rep = verify_tree_constructions(max_tree_vertices=5, dim6_samples=10, max_pendant_dim=4)
    assert rep.ok
    assert rep.counters["extras_path4"] == 220
    assert rep.counters["degenerate_dim2_leaf"] == 2


def test_mutation_small():
    rep = verify_mutation_invariants(max_dim=3, n_random=2, conj_samples=200)
    assert rep.ok and rep.counters["conjugation_triples"] == 200


class TestReports:
    def test_deterministic(self):
        a = verify_characterization(max_dim=3, n_random=3, seed=5)
        b = verify_characterization(max_dim=3, n_random=3, seed=5)
        assert _strip_time(a) == _strip_time(b)

    def test_json_and_text(self):
        rep = reproduce_counterexample(3)
        back = json.loads(rep.to_json())
        assert back["suite"] == "counterexample(n=3)" and back["discrepancies"] == []
        assert rep.to_text().startswith("suite counterexample(n=3): OK")

    def test_discrepancy_recorded(self):
        rep = VerificationReport("x")
        rep.record(True)
        rep.record(False, {"why": "test"})
        assert not rep.ok and rep.checked == 2 and rep.discrepancies == [{"why": "test"}]

    def test_dumps_replay(self):
        # every dump carries a full instance; re-running it gives the same order
        rep = verify_letter_count(max_dim=2, n_random=0, exploratory=True, exploratory_max_dim=2)
        entries = [f for f in rep.findings if "gram" in f]
        assert entries
        for f in entries:
            inst = parse_instance(json.loads(json.dumps(f)))
            assert generate_group(inst.space, inst.set).order == f["order"]

    def test_run_suite_names(self):
        assert set(SUITES) == {"characterization", "counterexample", "letter-count", "graphs", "trees", "mutation"}
        with pytest.raises(ValueError):
            run_suite("nope")
