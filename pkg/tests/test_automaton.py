"""Small-root enumeration, the reduced-word automaton, and growth counting."""

import random

import pytest

from coxroots.automaton import get_automaton, small_inversion_set, small_roots
from coxroots.depth import dominance_depth
from coxroots.roots import IDENTITY, RootSystem
from conftest import element_ball


def vec_of(rs, *coeffs):
    return tuple(rs.field.rational(c) for c in coeffs)


def coords_set(rs, rids):
    return {rs.roots[i].coords for i in rids}


def test_small_roots_affine_a2(atilde2):
    rs = atilde2
    got = coords_set(rs, small_roots(rs, 0).ids)
    want = {
        vec_of(rs, 1, 0, 0), vec_of(rs, 0, 1, 0), vec_of(rs, 0, 0, 1),
        vec_of(rs, 1, 1, 0), vec_of(rs, 1, 0, 1), vec_of(rs, 0, 1, 1),
    }
    assert got == want


def test_small_roots_infinite_dihedral(dinf):
    rs = dinf
    assert coords_set(rs, small_roots(rs, 0).ids) == {vec_of(rs, 1, 0), vec_of(rs, 0, 1)}
    got = coords_set(rs, small_roots(rs, 2).ids)
    want = {vec_of(rs, k + 1, k) for k in range(3)} | {vec_of(rs, k, k + 1) for k in range(3)}
    assert got == want


def test_small_roots_universal_is_simple_only(universal3):
    rs = universal3
    assert coords_set(rs, small_roots(rs, 0).ids) == {rs.basis_vec(s) for s in range(3)}


def test_small_sets_filter_and_match_definition(atilde2, gtilde2):
    for rs in (atilde2, gtilde2):
        prev = set()
        for n in range(3):
            sm = set(small_roots(rs, n).ids)
            assert prev <= sm
            prev = sm
            # defining property against the recurrence-computed depth
            for r in rs.roots_to_depth(6):
                assert (r.id in sm) == (dominance_depth(rs, r.id) <= n)


def test_small_roots_of_parabolic_embed(gtilde2):
    from coxroots.system import build_system

    amb = gtilde2
    sub = RootSystem(build_system([[1, 6], [6, 1]]))
    for n in range(2):
        amb_small = coords_set(amb, small_roots(amb, n).ids)
        for rid in small_roots(sub, n).ids:
            c = sub.roots[rid].coords
            lifted = tuple(amb.field.scalar(list(x.coeffs)) for x in c) + (amb.field.zero,)
            assert lifted in amb_small


def test_infinite_dihedral_automaton_shape(dinf):
    auto = get_automaton(dinf, 0)
    assert auto.state_count() == 3
    masks = {frozenset(auto.state_ids(i)) for i in range(3)}
    a_s = dinf.root_id(dinf.basis_vec(0))
    a_t = dinf.root_id(dinf.basis_vec(1))
    assert masks == {frozenset(), frozenset({a_s}), frozenset({a_t})}
    # from either singleton state only the other generator may continue
    i_s = auto.run_left([0])
    i_t = auto.run_left([1])
    assert auto.transitions[i_s] == {1: i_t}
    assert auto.transitions[i_t] == {0: i_s}
    assert auto.transitions[0] == {0: i_s, 1: i_t}


def test_state_count_matches_brute_force(atilde2):
    rs = atilde2
    auto = get_automaton(rs, 0)
    ball = [e for lvl in element_ball(rs, 12) for e in lvl]
    brute = {small_inversion_set(rs, w, 0) for w in ball}
    assert auto.state_count() == len(brute)


def test_state_of_equals_direct_intersection(atilde2, gtilde2):
    for rs, seed in ((atilde2, 3), (gtilde2, 4)):
        rng = random.Random(seed)
        for n in (0, 1):
            auto = get_automaton(rs, n)
            assert auto.state_of(IDENTITY) == auto.start
            for _ in range(40):
                w = rs.element(tuple(rng.randrange(rs.rank) for _ in range(rng.randrange(9))))
                assert frozenset(auto.state_ids(auto.state_of(w))) == small_inversion_set(rs, w, n)


def test_known_states(dinf, atilde2):
    auto = get_automaton(dinf, 0)
    ts = dinf.element((1, 0))
    assert coords_set(dinf, auto.state_ids(auto.state_of(ts))) == {vec_of(dinf, 0, 1)}
    auto2 = get_automaton(atilde2, 0)
    w31 = atilde2.element_from_str("3 1")
    got = coords_set(atilde2, auto2.state_ids(auto2.state_of(w31)))
    assert got == {vec_of(atilde2, 0, 0, 1), vec_of(atilde2, 1, 0, 1)}


def test_descent_identity_for_smaller_threshold(atilde2):
    """Dropping the top threshold after a descent: the (n-1)-small part of s*w
    is the (n-1)-small restriction of s applied to the n-small part of w."""
    rs = atilde2
    rng = random.Random(8)
    for n in (1, 2):
        sm_low = small_roots(rs, n - 1)
        for _ in range(30):
            w = rs.element(tuple(rng.randrange(3) for _ in range(rng.randrange(1, 9))))
            for s in rs.left_descents(w):
                sw = rs.left_quotient(s, w)
                lhs = small_inversion_set(rs, sw, n - 1)
                alpha = rs.root_id(rs.basis_vec(s))
                rhs = set()
                for rid in small_inversion_set(rs, w, n):
                    if rid == alpha:
                        continue
                    iid = rs.root_id(rs.simple_reflect(s, rs.roots[rid].coords))
                    if iid in sm_low:
                        rhs.add(iid)
                assert lhs == frozenset(rhs)


def test_is_reduced_examples(atilde2, dinf):
    auto = get_automaton(atilde2, 0)
    assert not auto.is_reduced((0, 0))
    assert not auto.is_reduced((0, 1, 0, 1))  # braid order 3 makes this length 2
    assert auto.is_reduced((0, 1, 0))
    dauto = get_automaton(dinf, 0)
    assert dauto.is_reduced((0, 1, 0, 1, 0))
    assert not dauto.is_reduced((1, 1))


def test_is_reduced_matches_length_on_all_short_words(atilde2, universal3):
    import itertools

    for rs in (atilde2, universal3):
        auto = get_automaton(rs, 0)
        for k in range(7):
            for word in itertools.product(range(rs.rank), repeat=k):
                assert auto.is_reduced(word) == (rs.word_length(word) == k)


def test_growth_counts(dinf, atilde2, gtilde2, universal3):
    dauto = get_automaton(dinf, 0)
    assert dauto.count_elements_by_length(6) == [1, 2, 2, 2, 2, 2, 2]
    for rs in (atilde2, gtilde2, universal3):
        auto = get_automaton(rs, 0)
        got = auto.count_elements_by_length(8)
        want = [len(lvl) for lvl in element_ball(rs, 8)]
        assert got == want


def test_growth_independent_of_threshold(atilde2):
    rs = atilde2
    assert get_automaton(rs, 0).count_elements_by_length(7) == \
        get_automaton(rs, 2).count_elements_by_length(7)


def test_states_containing(dinf, atilde2):
    dauto = get_automaton(dinf, 0)
    both = [dinf.root_id(dinf.basis_vec(0)), dinf.root_id(dinf.basis_vec(1))]
    assert dauto.states_containing(both) == []
    assert len(dauto.states_containing([])) == dauto.state_count()
    rs = atilde2
    auto = get_automaton(rs, 0)
    trio = [rs.root_id(vec_of(rs, 0, 0, 1)), rs.root_id(vec_of(rs, 1, 0, 1)),
            rs.root_id(vec_of(rs, 0, 1, 1))]
    assert auto.states_containing(trio)
    with pytest.raises(ValueError):
        auto.states_containing([rs.root_id(vec_of(rs, 1, 1, 2))])


def test_exports(dinf):
    auto = get_automaton(dinf, 0)
    dot = auto.to_dot()
    assert dot.startswith("digraph") and "q0" in dot
    data = auto.to_json()
    assert data["n"] == 0 and len(data["states"]) == 3 and data["start"] == 0
