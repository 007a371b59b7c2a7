"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; any assertion failure marks that criterion FAIL before re-raising.
"""

import functools
import random
import time

from coxroots import (
    Coideal,
    RootSystem,
    chain_labels,
    check_balanced,
    check_bipodal,
    coideal_length,
    companion_simple,
    dominance_depth,
    dominance_set,
    garside_closure,
    get_automaton,
    is_low,
    join,
    low_elements,
    monotonicity_probe,
    plane_subsystem,
    realize_cone,
    root_weak_covers,
    root_bruhat_steps,
    small_roots,
    verify_garside,
)
from coxroots.roots import IDENTITY, Element
from conftest import element_ball

ALL_PRESETS = ["Atilde2", "Gtilde2", "Dinf", "universal:3",
               "rank3:7,3", "rank3:5,4", "triangle:2,3,7"]

_cache = {}


def get(name: str) -> RootSystem:
    if name not in _cache:
        _cache[name] = RootSystem.preset(name)
    return _cache[name]


def criterion(number, label):
    def deco(fn):
        @functools.wraps(fn)
        def wrapped():
            try:
                fn()
            except BaseException:
                print(f"\ncriterion {number:2d} [{label}]: FAIL")
                raise
            print(f"\ncriterion {number:2d} [{label}]: PASS")
        return wrapped
    return deco


SIXTEEN = ["e", "1", "2", "3", "1 2", "2 1", "1 3", "3 1", "2 3", "3 2",
           "1 2 1", "1 3 1", "2 3 2", "1 2 3 2", "2 3 1 3", "3 1 2 1"]


def sixteen_set(rs):
    return {rs.element_from_str(w) for w in SIXTEEN}


@criterion(1, "affine A2 smallest shadow")
def test_criterion_01_shadow_reproduction():
    rs = get("Atilde2")
    started = time.time()
    report = garside_closure(rs)
    elapsed = time.time() - started
    assert set(report.elements) == sixteen_set(rs)
    assert report.converged
    # everything is present after two growth rounds; the next round only confirms
    assert report.per_iteration[2] == {"suffixes_added": 0, "join_pairs_added": 0}
    assert elapsed < 10.0


@criterion(2, "affine A2 low elements")
def test_criterion_02_low_elements():
    rs = get("Atilde2")
    report = low_elements(rs, 0)
    assert set(report.elements) == sixteen_set(rs)


@criterion(3, "affine A2 joins")
def test_criterion_03_joins():
    rs = get("Atilde2")
    for a, b, want in [("3 1", "3 2", "3 1 2 1"), ("2 1", "2 3", "2 1 3 1"),
                       ("1 2", "1 3", "1 2 3 2")]:
        out = join(rs, rs.element_from_str(a), rs.element_from_str(b))
        assert out.exists and out.element == rs.element_from_str(want), (a, b)
    out = join(rs, rs.element_from_str("1"), rs.element_from_str("3 2"))
    assert not out.exists and out.element is None


@criterion(4, "infinite dihedral and universal groups")
def test_criterion_04_dinf_and_universal():
    for name in ("Dinf", "universal:3"):
        rs = get(name)
        simples = {rs.root_id(rs.basis_vec(s)) for s in range(rs.rank)}
        assert set(small_roots(rs, 0).ids) == simples
        want = {IDENTITY} | {Element((s,)) for s in range(rs.rank)}
        assert set(low_elements(rs, 0).elements) == want
        shadow = garside_closure(rs)
        assert shadow.converged and set(shadow.elements) == want
    rs = get("Dinf")
    for k in range(7):
        s_side = tuple(rs.field.rational(c) for c in (k + 1, k))
        t_side = tuple(rs.field.rational(c) for c in (k, k + 1))
        assert dominance_depth(rs, rs.root_id(s_side)) == k
        assert dominance_depth(rs, rs.root_id(t_side)) == k


@criterion(5, "affine G2 low element outside the smallest shadow")
def test_criterion_05_gtilde2_low_outside_shadow():
    rs = get("Gtilde2")
    w = rs.element((0, 2, 1))  # generators 1 3 2
    assert is_low(rs, w, 0)
    alpha = rs.basis_vec(0)
    gamma = rs.basis_vec(2)
    nu = rs.act((0, 2), rs.basis_vec(1))
    ids = [rs.root_id(v) for v in (alpha, gamma, nu)]
    assert rs.inversion_set(w) == frozenset(ids)
    realized = realize_cone(rs, ids)
    assert realized.element == w  # so N(w) is exactly the cone over the three
    shadow = garside_closure(rs)
    assert shadow.converged
    assert w not in set(shadow.elements)


@criterion(6, "affine G2 balance counterexample")
def test_criterion_06_gtilde2_balance_fails():
    rs = get("Gtilde2")
    report = check_balanced(rs, small_roots(rs, 0).ids)
    assert report.status == "fail"
    segments = {w.get("segment_dominance_depths") for w in report.witnesses}
    assert (0, 0, 1, 0, 1, 0) in segments


@criterion(7, "bipodality theorems")
def test_criterion_07_bipodality():
    for name in ALL_PRESETS:
        rs = get(name)
        report = check_bipodal(rs, small_roots(rs, 0).ids)
        assert report.status == "pass", (name, 0, report)
    for name in ("Atilde2", "Gtilde2", "universal:3", "Dinf"):
        rs = get(name)
        for n in (1, 2):
            report = check_bipodal(rs, small_roots(rs, n).ids)
            assert report.status == "pass", (name, n, report)


@criterion(8, "low sets satisfy the Garside axioms")
def test_criterion_08_low_sets_are_shadows():
    for name in ALL_PRESETS:
        rs = get(name)
        report = low_elements(rs, 0)
        assert verify_garside(rs, set(report.elements)).ok, name
    for name in ("Atilde2", "universal:3"):
        rs = get(name)
        report = low_elements(rs, 1)
        assert verify_garside(rs, set(report.elements)).ok, name


@criterion(9, "cross-oracle identities on random roots")
def test_criterion_09_cross_oracles():
    rng = random.Random(20260810)
    for name in ALL_PRESETS:
        rs = get(name)
        pool = rs.roots_to_depth(8)
        all_ray = Coideal.all()
        dom_ray = Coideal.at_least(rs.field.one)
        for _ in range(500):
            r = rng.choice(pool)
            dd = dominance_depth(rs, r.id)
            assert dd == len(dominance_set(rs, r.id)), (name, r.id)
            assert coideal_length(rs, r.coords, all_ray) == 2 * r.depth - 1, (name, r.id)
            assert coideal_length(rs, r.coords, dom_ray) == 2 * dd + 1, (name, r.id)


@criterion(10, "automaton recognizes reduced words and counts elements")
def test_criterion_10_automaton_correctness():
    import itertools

    for name in ALL_PRESETS:
        rs = get(name)
        started = time.time()
        levels = element_ball(rs, 8)
        elems = [e for lvl in levels for e in lvl]
        index = {e: i for i, e in enumerate(elems)}
        trans = {}
        for e in elems:
            for s in range(rs.rank):
                y = rs.normalize(e.word + (s,))
                if y in index:
                    trans[(index[e], s)] = index[y]
        auto = get_automaton(rs, 0)
        for k in range(9):
            for word in itertools.product(range(rs.rank), repeat=k):
                cur = index[IDENTITY]
                for s in word:
                    cur = trans[(cur, s)]
                assert auto.is_reduced(word) == (len(elems[cur].word) == k), (name, word)
        assert auto.count_elements_by_length(8) == [len(lvl) for lvl in levels], name
        assert time.time() - started < 60.0, name


@criterion(11, "monotonicity along the root orders")
def test_criterion_11_monotonicity():
    rng = random.Random(11)
    # invariance of coideal label counts across maximal chains: 100 pairs
    rs = get("Atilde2")
    rays = [Coideal.all(), Coideal.at_least(rs.field.one), Coideal.more_than(rs.field.one)]
    pairs_checked = 0
    while pairs_checked < 100:
        start = rng.choice(rs.roots_to_depth(3)).coords
        if rng.random() < 0.5:
            start = tuple(-c for c in start)
        chains = [[start]]
        for _ in range(rng.randrange(2, 4)):
            chains = [c + [e.target] for c in chains for e in root_weak_covers(rs, c[-1])]
        by_end = {}
        for c in chains:
            by_end.setdefault(c[-1], []).append(c)
        for end, group in by_end.items():
            for i in range(len(group) - 1):
                first = chain_labels(rs, group[i])
                second = chain_labels(rs, group[i + 1])
                for x in rays:
                    a = sum(1 for v in first.numeric_labels if x.contains(v))
                    b = sum(1 for v in second.numeric_labels if x.contains(v))
                    assert a == b
                    lhs = coideal_length(rs, end, x) - coideal_length(rs, start, x)
                    assert a == lhs // 2 and lhs % 2 == 0
                pairs_checked += 1
                if pairs_checked >= 100:
                    break
            if pairs_checked >= 100:
                break
    # coideal lengths never decrease along 500 Bruhat steps, cap 6
    for name in ("Atilde2", "Gtilde2"):
        rs2 = get(name)
        rays2 = [Coideal.all(), Coideal.at_least(rs2.field.one),
                 Coideal.more_than(rs2.field.one)]
        pool = rs2.roots_to_depth(6)
        steps_checked = 0
        while steps_checked < 250:
            vec = rng.choice(pool).coords
            if rng.random() < 0.5:
                vec = tuple(-c for c in vec)
            steps = root_bruhat_steps(rs2, vec, cap=6)
            if not steps:
                continue
            edge = rng.choice(steps)
            for x in rays2:
                assert coideal_length(rs2, edge.source, x) <= coideal_length(rs2, edge.target, x)
            steps_checked += 1
    # strict dominance-depth increase on 20 infinite maximal dihedral subsystems
    seen_planes = set()
    for name in ("Atilde2", "Gtilde2", "rank3:5,4"):
        rs3 = get(name)
        pool = rs3.roots_to_depth(5)
        for a in pool:
            for b in pool:
                if len(seen_planes) >= 20:
                    break
                try:
                    sub = plane_subsystem(rs3, a.coords, b.coords)
                except ValueError:
                    continue
                if sub.finite or (name, sub.plane_key) in seen_planes:
                    continue
                seen_planes.add((name, sub.plane_key))
                assert monotonicity_probe(rs3, sub, cap=6).ok
            if len(seen_planes) >= 20:
                break
    assert len(seen_planes) >= 20


@criterion(12, "base of a suffix stays in image or companions of the base")
def test_criterion_12_suffix_base():
    rng = random.Random(12)
    for name in ("Atilde2", "Gtilde2"):
        rs = get(name)
        checked = 0
        while checked < 100:
            x = rs.element(tuple(rng.randrange(3) for _ in range(rng.randrange(2, 9))))
            descents = rs.left_descents(x)
            if not descents:
                continue
            s = rng.choice(descents)
            checked += 1
            sx = rs.left_quotient(s, x)
            alpha_id = rs.root_id(rs.basis_vec(s))
            pruned = [rs.roots[i].coords for i in rs.inversion_base(x) if i != alpha_id]
            allowed = set()
            for beta in pruned:
                allowed.add(rs.simple_reflect(s, beta))
                allowed.add(companion_simple(rs, s, beta))
            for rid in rs.inversion_base(sx):
                assert rs.roots[rid].coords in allowed, (name, x, s)


def test_conjecture_dashboard():
    """Status report, not pass/fail: the state-map bijection and bipodality
    at higher thresholds, with witnesses when they exist."""
    plans = {"Atilde2": 2, "Gtilde2": 1, "Dinf": 3, "universal:3": 2}
    print()
    for name, max_bijection_n in plans.items():
        rs = get(name)
        for n in range(4):
            sm = small_roots(rs, n)
            bip = check_bipodal(rs, sm.ids)
            line = (f"dashboard {name} n={n}: small={len(sm.ids)} "
                    f"bipodal={bip.status}")
            if n <= max_bijection_n:
                rep = low_elements(rs, n)
                line += (f" low={len(rep.elements)} states={rep.state_count} "
                         f"state_map_bijective={rep.bijection_holds}")
                if rep.missed_states:
                    line += f" missed_states={list(rep.missed_states)}"
            print(line)
            for w in bip.witnesses:
                print(f"  bipodality witness: {w}")
            assert bip.status in ("pass", "fail", "inconclusive")
