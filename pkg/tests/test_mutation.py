import itertools
import json

import pytest

from transvect.f2core import SymplecticSpace, VectorSet, rank, unit
from transvect.graphs import graph_of_set, is_path_graph
from transvect.groupgen import generate_group, groups_equal
from transvect.harness import counterexample_instance
from transvect.mutation import (
    Move,
    MutationError,
    RadicalElementError,
    apply_move,
    decide_symmetric_via_mutation,
    equivalence_class_bfs,
    mutate,
    replay,
)


class TestMutate:
    def test_counterexample_reaches_basis(self):
        sp, vs = counterexample_instance(3)
        out = mutate(sp, vs, unit(1), unit(1) | unit(2), mode="T")
        assert out == VectorSet.standard_basis(sp)

    def test_same_vector_is_noop(self):
        sp, vs = counterexample_instance(3)
        assert mutate(sp, vs, unit(2), unit(2)) == vs

    def test_orthogonal_pair_is_noop(self):
        sp = SymplecticSpace.path_form(3)
        vs = VectorSet(sp, [unit(1), unit(3)])
        assert mutate(sp, vs, unit(1), unit(3)) == vs

    def test_members_required(self):
        sp = SymplecticSpace.path_form(3)
        vs = VectorSet(sp, [unit(1), unit(2)])
        with pytest.raises(MutationError):
            mutate(sp, vs, unit(1), unit(3))

    def test_independent_mode_rejects_shrink(self):
        sp, vs = counterexample_instance(3)
        with pytest.raises(MutationError):
            mutate(sp, vs, unit(1), unit(1) | unit(2), mode="I")

    def test_independent_moves_keep_invariants(self):
        sp = SymplecticSpace.path_form(4)
        vs = VectorSet.standard_basis(sp)
        g0 = generate_group(sp, vs)
        for a, b in itertools.permutations(vs.members, 2):
            out = mutate(sp, vs, a, b, mode="I")
            assert out.is_independent() and len(out) == 4 and out.spans()
            assert groups_equal(g0, generate_group(sp, out))


class TestClassSearch:
    def test_path_basis_is_own_representative(self):
        sp = SymplecticSpace.path_form(3)
        rep = equivalence_class_bfs(sp, VectorSet.standard_basis(sp), "I")
        assert rep.path_representative == (1, 2, 4)
        assert rep.move_trace == []
        assert not rep.truncated

    def test_counterexample_in_t_mode(self):
        sp, vs = counterexample_instance(3)
        rep = equivalence_class_bfs(sp, vs, "T", stop_at_path=True)
        assert rep.path_representative is not None
        assert len(rep.move_trace) == 1
        out = replay(sp, vs, rep.move_trace, "T")
        assert out.canonical() == rep.path_representative
        assert is_path_graph(graph_of_set(sp, out))

    def test_edgeless_pair_class_of_one(self):
        sp = SymplecticSpace.path_form(3)
        rep = equivalence_class_bfs(sp, VectorSet(sp, [unit(1), unit(3)]), "I")
        assert rep.class_size == 1 and rep.path_representative is None and not rep.truncated

    def test_truncation(self):
        sp = SymplecticSpace.path_form(4)
        vs = VectorSet(sp, [unit(1), unit(3), unit(1) | unit(2) | unit(4)])
        rep = equivalence_class_bfs(sp, vs, "I", max_sets=2)
        assert rep.truncated

    def test_independent_mode_needs_independent_set(self):
        sp, vs = counterexample_instance(3)
        with pytest.raises(MutationError):
            equivalence_class_bfs(sp, vs, "I")

    def test_t_mode_class_contains_grow_moves(self):
        sp, vs = counterexample_instance(3)
        rep = equivalence_class_bfs(sp, vs, "T", keep_members=True)
        assert VectorSet.standard_basis(sp).canonical() in rep.members
        assert rep.grow_moves > 0 and rep.shrink_moves > 0
        # the class is closed: every member has the same span and group
        g0 = generate_group(sp, vs)
        for m in rep.members:
            assert rank(m) == 3
            assert groups_equal(g0, generate_group(sp, m))


class TestDecision:
    def test_path_basis_true(self):
        sp = SymplecticSpace.path_form(4)
        assert decide_symmetric_via_mutation(sp, VectorSet.standard_basis(sp)) is True

    def test_edgeless_pair_false(self):
        sp = SymplecticSpace.path_form(3)
        vs = VectorSet(sp, [unit(1), unit(3)])
        assert decide_symmetric_via_mutation(sp, vs) is False
        assert generate_group(sp, vs).order == 4

    def test_counterexample_t_mode_true(self):
        sp, vs = counterexample_instance(3)
        assert decide_symmetric_via_mutation(sp, vs, mode="T") is True

    def test_radical_member_rejected(self):
        sp = SymplecticSpace.path_form(3)
        with pytest.raises(RadicalElementError):
            decide_symmetric_via_mutation(sp, VectorSet(sp, [0b101, unit(2)]))

    def test_truncated_is_unknown(self):
        sp = SymplecticSpace.path_form(4)
        vs = VectorSet(sp, [unit(1), unit(3), unit(1) | unit(2) | unit(4)])
        full = decide_symmetric_via_mutation(sp, vs)
        capped = decide_symmetric_via_mutation(sp, vs, max_sets=1)
        assert full is not None
        assert capped in (None, full)


class TestTraces:
    def test_json_roundtrip(self):
        for mv in (Move(1, 2), Move(3, 4, grow=True)):
            text = json.dumps(mv.to_json(4))
            assert Move.from_json(json.loads(text)) == mv

    def test_replay_matches_bfs(self):
        sp = SymplecticSpace.path_form(4)
        vs = VectorSet(sp, [unit(1) | unit(3), unit(2), unit(3) | unit(4), unit(4)])
        rep = equivalence_class_bfs(sp, vs, "I", stop_at_path=True)
        assert rep.path_representative is not None
        dumped = json.dumps([m.to_json(4) for m in rep.move_trace])
        out = replay(sp, vs, [Move.from_json(x) for x in json.loads(dumped)], "I")
        assert out.canonical() == rep.path_representative

    def test_apply_move_grow_inverts_shrink(self):
        sp, vs = counterexample_instance(3)
        shrunk = apply_move(sp, vs, Move(unit(1), unit(1) | unit(2)), "T")
        assert len(shrunk) == 3
        regrown = apply_move(sp, shrunk, Move(unit(1), unit(2), grow=True), "T")
        assert regrown == vs
