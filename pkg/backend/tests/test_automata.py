"""
Tests for the a*b = a near rings, N-groups, alphabet freeness and automata.
"""
import numpy as np
import pytest

from app.algebra.automata import (
    add_mod_semiautomaton,
    build_automaton,
    build_near_definite_automaton,
    build_near_ring_zn,
    build_semiautomaton,
    check_n_group,
    freeness_check,
    input_projection,
    is_collision,
    normalise_alphabet,
    tuple_alphabet_automaton,
)
from app.algebra.constructors import cyclic
from app.algebra.detect import NotFound, Property, SymbolicStructure, detect
from app.algebra.errors import (
    ConstructionGate,
    InvalidAlphabet,
    MalformedTable,
    SizeGuard,
    TableShape,
    UnknownLetter,
    Unsupported,
)
from app.algebra.finite import check_near_ring, check_ring
from app.algebra.symbolic import Z_NONNEG, format_set


class TestNearRings:
    def test_z5_is_a_near_ring(self):
        near_ring = build_near_ring_zn(5)
        assert near_ring.name == "(Z_5,+,a*b=a)"
        assert check_near_ring(near_ring.table).ok
        assert not check_ring(near_ring.table, cap=1).ok

    def test_left_distributivity_fails(self):
        """a*(b+c) = a but a*b + a*c = 2a."""
        report = build_near_ring_zn(5).left_distributivity()
        witnesses = [v.witness for v in report.violations]
        assert witnesses[0] == (1, 0, 0)
        assert (1, 1, 1) in witnesses
        assert all(a != 0 for a, _, _ in witnesses)

    def test_trivial_near_ring_is_left_distributive(self):
        assert build_near_ring_zn(1).left_distributivity().ok

    def test_size_guard(self):
        with pytest.raises(SizeGuard):
            build_near_ring_zn(0)


class TestNGroups:
    def test_constant_action(self):
        """n.p = n makes Z_3 an N-group over (Z_3, +, a*b=a)."""
        near_ring = build_near_ring_zn(3).table
        action = [[n for _ in range(3)] for n in range(3)]
        assert check_n_group(near_ring, cyclic(3), action).ok

    def test_identity_action_is_not_additive(self):
        near_ring = build_near_ring_zn(3).table
        action = [[p for p in range(3)] for _ in range(3)]
        report = check_n_group(near_ring, cyclic(3), action)
        assert "additive_action" in report.axioms_failed()

    def test_action_shape(self):
        with pytest.raises(TableShape):
            check_n_group(build_near_ring_zn(3).table, cyclic(3), [[0, 0, 0]])

    def test_action_values(self):
        with pytest.raises(MalformedTable):
            check_n_group(build_near_ring_zn(2).table, cyclic(2), [[0, 5], [1, 0]])


class TestFreeness:
    def test_one_and_two_collide(self):
        verdict = freeness_check([1, 2])
        assert not verdict.free
        assert verdict.left == (0, 1)
        assert verdict.right == (2, 0)
        assert verdict.describe() == "2 = 2*1"

    def test_two_and_three(self):
        verdict = freeness_check([2, 3])
        assert verdict.describe() == "2*3 = 3*2"
        assert verdict.total == (6,)

    def test_independent_tuples_are_free(self):
        verdict = freeness_check([(4, 7, 5), (1, 1, 1)], bound=8)
        assert verdict.free
        assert verdict.to_dict()["bounded"] is True

    def test_tuple_collision(self):
        verdict = freeness_check([(1, 0), (0, 1), (1, 1)])
        assert verdict.left == (0, 0, 1)
        assert verdict.right == (1, 1, 0)
        assert verdict.to_dict()["total"] == "(1,1)"

    def test_mixed_alphabet_collides(self):
        verdict = freeness_check([4, 7, 5])
        assert not verdict.free
        assert is_collision([4, 7, 5], verdict.left, verdict.right)
        assert verdict.left != verdict.right

    def test_single_letter_is_free(self):
        assert freeness_check([3], bound=5).free

    def test_bound_from_settings(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_FREENESS_BOUND", "2")
        assert freeness_check([2, 3]).free

    @pytest.mark.parametrize("alphabet", [[], [0], [1, -1], [1, 1], [(1, 0), (1,)]])
    def test_invalid_alphabets(self, alphabet):
        with pytest.raises(InvalidAlphabet):
            normalise_alphabet(alphabet)

    def test_is_collision(self):
        assert is_collision([1, 2], [2, 0], [0, 1])
        assert not is_collision([1, 2], [1, 0], [1, 0])
        assert not is_collision([1, 2], [1, 0], [0, 1])


class TestAutomata:
    def test_add_mod_trace(self):
        semi = add_mod_semiautomaton(4, [1])
        assert semi.run([1, 1, 1]) == [0, 1, 2, 3]

    def test_letter_indices(self):
        semi = add_mod_semiautomaton(5, [1, 2])
        word = semi.letters_at([1, 1, 0])
        assert word == [2, 2, 1]
        assert semi.run(word, start=3) == [3, 0, 2, 3]
        with pytest.raises(UnknownLetter):
            semi.letters_at([2])

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter):
            add_mod_semiautomaton(4, [1]).run([2])

    def test_table_rule(self):
        semi = build_semiautomaton(["s", "t"], ["a"], transition=[[1], [0]])
        assert semi.run(["a", "a", "a"]) == ["s", "t", "s", "t"]

    def test_table_rule_needs_a_table(self):
        with pytest.raises(Unsupported):
            build_semiautomaton(["s"], ["a"])
        with pytest.raises(Unsupported):
            build_semiautomaton(["s"], ["a"], rule="add-mod")

    def test_transition_entries(self):
        with pytest.raises(MalformedTable):
            build_semiautomaton(["s"], ["a"], transition=[[1]])
        with pytest.raises(TableShape):
            build_semiautomaton(["s", "t"], ["a"], transition=[[0]])

    def test_outputs(self):
        semi = add_mod_semiautomaton(2, [1])
        automaton = build_automaton(semi, ["even", "odd"], [[0], [1]])
        trace, out = automaton.run_io([1, 1, 1])
        assert trace == [0, 1, 0, 1]
        assert out == ["even", "odd", "even"]

    def test_input_projection(self):
        automaton = input_projection(add_mod_semiautomaton(3, [1, 2]))
        _, out = automaton.run_io([2, 1])
        assert out == [2, 1]

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_run_agrees_with_run_io(self, seed):
        rng = np.random.default_rng(seed)
        semi = add_mod_semiautomaton(7, [1, 3, 5])
        automaton = input_projection(semi)
        for _ in range(50):
            word = semi.letters_at(rng.integers(0, 3, size=int(rng.integers(0, 20))).tolist())
            start = int(rng.integers(0, 7))
            trace, out = automaton.run_io(word, start=start)
            assert trace == semi.run(word, start=start)
            assert len(out) == len(word)

    def test_state_guard(self, monkeypatch):
        monkeypatch.setenv("ALGLAB_MAX_TABLE_ORDER", "100")
        with pytest.raises(SizeGuard):
            add_mod_semiautomaton(5, [(1, 0, 0)])

    def test_mixed_widths(self):
        with pytest.raises(Unsupported):
            add_mod_semiautomaton(2, [(1, 0), (1, 0, 0)])


class TestNearDefiniteAutomata:
    def test_tuple_alphabet_over_z2_cubed(self):
        built = tuple_alphabet_automaton()
        assert built.certificate.witness == format_set(Z_NONNEG)
        assert built.input_freeness.free
        assert built.output_freeness.free
        semi = built.automaton.semi
        assert len(semi.states) == 8
        trace, out = built.automaton.run_io([(1, 1, 1), (4, 7, 5)])
        assert trace == [(0, 0, 0), (1, 1, 1), (1, 0, 0)]
        assert out == [(1, 2, 3), (1, 2, 3)]

    def test_finite_near_ring_is_gated(self):
        automaton = input_projection(add_mod_semiautomaton(5, [1]))
        with pytest.raises(ConstructionGate):
            build_near_definite_automaton(build_near_ring_zn(5), automaton)

    def test_rational_near_ring(self):
        automaton = input_projection(add_mod_semiautomaton(3, [1, 2]))
        built = build_near_definite_automaton(SymbolicStructure.Q_NEAR_RING, automaton, bound=4)
        assert not built.input_freeness.free
        assert built.to_dict()["output_freeness"] is None

    @pytest.mark.parametrize("n", range(1, 25))
    def test_finite_near_rings_have_no_witness(self, n):
        result = detect(build_near_ring_zn(n).table, Property.S_DEFINITE_SPECIAL_NEAR_RING)
        assert isinstance(result, NotFound)
        assert result.exhaustive
