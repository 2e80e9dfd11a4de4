"""Capped and length-bounded reachability decisions for automata."""

import pytest

from vasskit import (
    BudgetExceededError,
    Configuration,
    PlaneVector,
    PreconditionError,
    REACHABLE,
    UNREACHABLE_WITHIN_CAP,
    Vass,
    brute_force_oracle,
    decide_bounded_witness,
    decide_capped_bfs,
    default_cap,
    witness_violation,
)

V = PlaneVector

LOOP = Vass(("a",), (("a", V(-1, 1), "a"),), frozenset({"a"}), frozenset({"a"}))
ZERO_EDGE = Vass(
    ("a", "b"),
    (("a", V(-1, 1), "a"), ("a", V(0, 0), "b")),
    frozenset({"a"}),
    frozenset({"b"}),
)


def test_loop_reachable():
    verdict = decide_capped_bfs(LOOP, Configuration(2, 0), Configuration(0, 2), 10)
    assert verdict.kind == REACHABLE
    assert verdict.length == 2
    assert witness_violation(
        LOOP, Configuration(2, 0), Configuration(0, 2), verdict.witness, verdict.states
    ) is None


def test_loop_unreachable():
    verdict = decide_capped_bfs(LOOP, Configuration(0, 0), Configuration(1, 0), 10)
    assert verdict.kind == UNREACHABLE_WITHIN_CAP


def test_zero_edge_in_witness():
    verdict = decide_capped_bfs(ZERO_EDGE, Configuration(2, 0), Configuration(0, 2), 10)
    assert verdict.kind == REACHABLE
    assert V(0, 0) in verdict.witness
    assert verdict.states[-1] == "b"


def test_cap_below_endpoints():
    with pytest.raises(PreconditionError):
        decide_capped_bfs(LOOP, Configuration(2, 0), Configuration(0, 2), 1)


def test_bounded_witness():
    s, t = Configuration(2, 0), Configuration(0, 2)
    assert decide_bounded_witness(LOOP, s, t, 2).kind == REACHABLE
    assert decide_bounded_witness(LOOP, s, t, 1).kind == UNREACHABLE_WITHIN_CAP


def test_bounded_witness_budget():
    grid = Vass(
        ("a",), (("a", V(1, 0), "a"), ("a", V(0, 1), "a")),
        frozenset({"a"}), frozenset({"a"}),
    )
    with pytest.raises(BudgetExceededError):
        decide_bounded_witness(grid, Configuration(0, 0), Configuration(90, 90), 180, budget=50)


def test_default_cap_formula():
    assert default_cap(LOOP, Configuration(2, 0), Configuration(0, 2)) == 64 * 2 * 3**4


def test_oracle_agreement_on_examples():
    for s, t in [((2, 0), (0, 2)), ((0, 0), (1, 0)), ((3, 1), (1, 3))]:
        fast = decide_capped_bfs(LOOP, Configuration(*s), Configuration(*t), 20)
        slow = brute_force_oracle(LOOP, Configuration(*s), Configuration(*t), 20)
        assert fast.kind == slow.kind
        if fast.kind == REACHABLE:
            assert fast.length == slow.length


def test_oracle_dead_machine():
    dead = Vass(("a", "b"), (), frozenset({"a"}), frozenset({"b"}))
    s = Configuration(0, 0)
    assert brute_force_oracle(dead, s, s, 5).kind == UNREACHABLE_WITHIN_CAP


def test_witness_violation_messages():
    s, t = Configuration(2, 0), Configuration(0, 2)
    word = (V(-1, 1), V(-1, 1))
    assert witness_violation(LOOP, s, t, word, ("a", "a")) is not None  # trace too short
    assert witness_violation(LOOP, s, t, word, ("a", "a", "a")) is None
    bad_word = (V(-1, 1), V(1, 1))
    assert witness_violation(LOOP, s, t, bad_word, ("a", "a", "a")) is not None
