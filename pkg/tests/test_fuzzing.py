"""Fuzzing harness internals: oracles, determinism, minimization."""

from random import Random

from vasskit import PlaneVector, ZERO, cone_contains, cone_contains_zero, slps_of
from vasskit import fuzzing

V = PlaneVector


def test_angle_gap_oracle_matches_implementation():
    rng = Random(11)
    for _ in range(300):
        cone_set = fuzzing._gen_vector_set(rng)
        assert fuzzing.oracle_cone_contains_zero(cone_set) == cone_contains_zero(cone_set)


def test_membership_oracle_on_pairs():
    rng = Random(12)
    pool = fuzzing._all_vectors(3)
    for _ in range(300):
        a, b, c = (rng.choice(pool) for _ in range(3))
        if a.is_zero() or b.is_zero() or cone_contains_zero({a, b}):
            continue
        assert fuzzing.oracle_cone_member(a, b, c) == cone_contains({a, b}, c)


def test_enumeration_oracle_matches_membership():
    rng = Random(13)
    for _ in range(100):
        cone_set = fuzzing._gen_vector_set(rng)
        assert fuzzing.oracle_zero_combination_exists(cone_set) == cone_contains_zero(
            cone_set
        )


def test_bounded_relation_single_cycle():
    up = slps_of([ZERO, ZERO], [V(0, 1)])
    states = fuzzing.bounded_relation(fuzzing._lps_blocks(up), 6)
    effects = {(ex, ey) for (_, ex, ey, _, _) in states}
    assert effects == {(0, n) for n in range(5)}  # two zero letters + up to 4 turns


def test_path_profile_matches_run():
    from vasskit import Configuration, effect, run
    from vasskit.core import Lps

    scheme = Lps(((V(0, 1),), ()), ((V(1, -1), V(-1, 1)),))
    word = (V(0, 1),) + (V(1, -1), V(-1, 1)) * 3
    length, eff, drop = fuzzing.path_profile(scheme, (3,))
    assert length == len(word)
    assert eff == effect(word)
    trace = run(word, Configuration(0, 0))
    assert drop.x == min(p.x for p in trace.visited)
    assert drop.y == min(p.y for p in trace.visited)


def test_run_target_deterministic():
    a = fuzzing.run_target("lemma5", 40, 9)
    b = fuzzing.run_target("lemma5", 40, 9)
    assert a == b and not a.failures


def test_minimize_shrinks_vector_sets(monkeypatch):
    target = fuzzing.TARGETS["lemma1"]
    big = frozenset({V(1, 0), V(0, 1), V(2, 2), V(-1, -1)})

    def fails_if_contains_antiparallel(case):
        return "boom" if fuzzing.oracle_cone_contains_zero(case) else None

    small = fuzzing.minimize(target, big, fails_if_contains_antiparallel)
    assert len(small) == 2 and fuzzing.oracle_cone_contains_zero(small)
