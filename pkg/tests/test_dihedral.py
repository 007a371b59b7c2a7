"""Dihedral subsystems: certified simple pairs, companions, and the probes."""

import random

import pytest

from coxroots.automaton import small_roots
from coxroots.depth import dominance_depth, dominance_depth_vec
from coxroots.dihedral import (
    CapExceeded,
    Plane,
    check_balanced,
    check_bipodal,
    check_heart,
    companion_simple,
    local_reflection_length,
    monotonicity_probe,
    plane_subsystem,
    planes_containing,
    positive_chain,
    segment,
)
from coxroots.roots import RootSystem


def vec_of(rs, *coeffs):
    return tuple(rs.field.rational(c) for c in coeffs)


def test_plane_membership_and_dependence(atilde2):
    rs = atilde2
    plane = Plane(rs, rs.basis_vec(1), vec_of(rs, 1, 0, 1))
    assert plane.contains(vec_of(rs, 1, 1, 1))
    assert not plane.contains(rs.basis_vec(0))
    with pytest.raises(ValueError):
        Plane(rs, rs.basis_vec(0), vec_of(rs, 2, 0, 0))


def test_affine_a2_infinite_plane(atilde2):
    rs = atilde2
    sub = plane_subsystem(rs, rs.basis_vec(1), vec_of(rs, 1, 0, 1))
    assert set(sub.simples) == {rs.basis_vec(1), vec_of(rs, 1, 0, 1)}
    assert not sub.finite
    assert sub.gram_simples == rs.field.rational(-1)


def test_two_simple_roots_are_canonical(atilde2, gtilde2):
    for rs in (atilde2, gtilde2):
        sub = plane_subsystem(rs, rs.basis_vec(0), rs.basis_vec(1))
        assert set(sub.simples) == {rs.basis_vec(0), rs.basis_vec(1)}
        assert sub.finite == (rs.system.label(0, 1) != 0)


def test_interior_root_is_not_simple(atilde2):
    rs = atilde2
    sub = plane_subsystem(rs, rs.basis_vec(2), vec_of(rs, 1, 1, 2))
    assert set(sub.simples) == {rs.basis_vec(2), vec_of(rs, 1, 1, 0)}


def test_certificate_soundness_recomputed(atilde2, gtilde2):
    """Independent recomputation of the certificate on returned simples."""
    rng = random.Random(83)
    for rs in (atilde2, gtilde2):
        pool = rs.roots_to_depth(4)
        planes = []
        for _ in range(8):
            a, b = rng.choice(pool).coords, rng.choice(pool).coords
            try:
                planes.append(plane_subsystem(rs, a, b))
            except ValueError:
                continue
        for sub in planes:
            plane = Plane(rs, *sub.simples)
            for delta, did in zip(sub.simples, sub.simple_ids):
                inv = rs.reflection_inversions(did)
                members = {i for i in inv if plane.contains(rs.roots[i].coords)}
                assert members == {did}
            assert len(set(sub.simples)) == 2


def test_finite_chain_walks_the_segment(gtilde2):
    rs = gtilde2
    sub = plane_subsystem(rs, rs.basis_vec(0), rs.basis_vec(1))  # label 6
    assert sub.finite and sub.size == 6
    chain = segment(rs, sub)
    assert chain[0] == sub.simples[0] and chain[-1] == sub.simples[1]
    assert len(chain) == 6
    # local reflection lengths fold symmetrically along the segment
    lengths = [local_reflection_length(rs, sub, v) for v in chain]
    assert lengths == [1, 3, 5, 5, 3, 1]


def test_local_length_vs_global(atilde2):
    rs = atilde2
    sub = plane_subsystem(rs, rs.basis_vec(1), vec_of(rs, 1, 0, 1))
    side = positive_chain(rs, sub.simples[0], sub.simples[1], 4)
    for i, v in enumerate(side, start=1):
        assert local_reflection_length(rs, sub, v) == 2 * i - 1
        assert 2 * i - 1 <= len(rs.reflection(rs.root_id(v)).word)
    with pytest.raises(ValueError):
        local_reflection_length(rs, sub, rs.basis_vec(0))


def test_companion_simple_examples(atilde2):
    rs = atilde2
    assert companion_simple(rs, 2, vec_of(rs, 1, 1, 2)) == vec_of(rs, 1, 1, 0)
    assert companion_simple(rs, 0, vec_of(rs, 1, 1, 0)) == rs.basis_vec(1)
    beta = vec_of(rs, 1, 0, 1)
    assert companion_simple(rs, 1, beta) == beta  # already a canonical pair
    with pytest.raises(ValueError):
        companion_simple(rs, 0, rs.basis_vec(0))


def test_companion_well_defined_across_seeds(atilde2):
    """Any interior root of the same plane seeds the same companion."""
    rs = atilde2
    plane_roots = [vec_of(rs, 0, 1, 0), vec_of(rs, 1, 1, 1), vec_of(rs, 2, 1, 2)]
    sub = plane_subsystem(rs, rs.basis_vec(1), vec_of(rs, 1, 0, 1))
    for v in plane_roots[1:]:
        assert plane_subsystem(rs, rs.basis_vec(1), v).simples == sub.simples


def test_planes_containing(atilde2):
    rs = atilde2
    for s in range(3):
        assert planes_containing(rs, rs.root_id(rs.basis_vec(s))) == []
    mid = rs.root_id(vec_of(rs, 1, 1, 0))
    subs = planes_containing(rs, mid)
    assert len(subs) == 1
    assert set(subs[0].simples) == {rs.basis_vec(0), rs.basis_vec(1)}
    deep = rs.root_id(vec_of(rs, 1, 1, 2))
    subs = planes_containing(rs, deep)
    keys = {frozenset(s.simples) for s in subs}
    assert frozenset({rs.basis_vec(2), vec_of(rs, 1, 1, 0)}) in keys


def test_pairs_in_inversion_sets_pair_above_minus_one(atilde2, gtilde2):
    rng = random.Random(89)
    for rs in (atilde2, gtilde2):
        for _ in range(20):
            w = rs.element(tuple(rng.randrange(3) for _ in range(rng.randrange(1, 8))))
            inv = [rs.roots[i].coords for i in rs.inversion_set(w)]
            for a in inv:
                for b in inv:
                    assert rs.form(a, b).cmp_to_minus_one() > 0


def test_bipodal_small_roots(atilde2, gtilde2, dinf, universal3):
    for rs in (atilde2, gtilde2, dinf, universal3):
        report = check_bipodal(rs, small_roots(rs, 0).ids)
        assert report.ok, report


def test_bipodal_fails_on_broken_set(gtilde2):
    rs = gtilde2
    sm = small_roots(rs, 0)
    # drop a canonical simple that some small root needs
    dropped = None
    for rid in sm.ids:
        subs = planes_containing(rs, rid)
        if subs:
            dropped = subs[0].simple_ids[0]
            break
    assert dropped is not None
    report = check_bipodal(rs, tuple(i for i in sm.ids if i != dropped))
    assert report.status == "fail"
    assert report.witnesses


def test_balance_counterexample_gtilde2(gtilde2):
    rs = gtilde2
    report = check_balanced(rs, small_roots(rs, 0).ids)
    assert report.status == "fail"
    segs = {w.get("segment_dominance_depths") for w in report.witnesses
            if "segment_dominance_depths" in w}
    assert (0, 0, 1, 0, 1, 0) in segs


def test_balance_passes_affine_a2_and_simples(atilde2):
    rs = atilde2
    assert check_balanced(rs, small_roots(rs, 0).ids).ok
    simple_ids = [rs.root_id(rs.basis_vec(s)) for s in range(3)]
    assert check_balanced(rs, simple_ids).ok


def test_heart_condition(atilde2, dinf):
    assert check_heart(dinf).ok  # vacuous: all small roots are simple
    assert check_heart(atilde2).ok
    rs73 = RootSystem.preset("rank3:7,3")
    assert check_heart(rs73).ok


def test_monotonicity_infinite_plane(atilde2):
    rs = atilde2
    sub = plane_subsystem(rs, rs.basis_vec(1), vec_of(rs, 1, 0, 1))
    report = monotonicity_probe(rs, sub, cap=5)
    assert report.ok
    side = positive_chain(rs, sub.simples[0], sub.simples[1], 3)
    assert [dominance_depth_vec(rs, v) for v in side] == [0, 1, 2]


def test_monotonicity_finite_planes(atilde2, gtilde2):
    rs = atilde2
    finite_sub = plane_subsystem(rs, rs.basis_vec(0), rs.basis_vec(1))
    assert monotonicity_probe(rs, finite_sub).ok
    # the unbalanced segment still satisfies the finite-case inequality
    sm = small_roots(gtilde2, 0)
    for rid in sm.ids:
        for sub in planes_containing(gtilde2, rid):
            if sub.finite:
                assert monotonicity_probe(gtilde2, sub).ok


def test_suffix_base_containment(atilde2, gtilde2):
    """Removing a left descent keeps base roots inside the image or the
    companion of the old base."""
    rng = random.Random(97)
    for rs in (atilde2, gtilde2):
        done = 0
        while done < 25:
            x = rs.element(tuple(rng.randrange(3) for _ in range(rng.randrange(2, 8))))
            lds = rs.left_descents(x)
            if not lds:
                continue
            s = rng.choice(lds)
            done += 1
            sx = rs.left_quotient(s, x)
            alpha = rs.root_id(rs.basis_vec(s))
            old_base = [rs.roots[i].coords for i in rs.inversion_base(x) if i != alpha]
            allowed = set()
            for beta in old_base:
                allowed.add(rs.simple_reflect(s, beta))
                allowed.add(companion_simple(rs, s, beta))
            for rid in rs.inversion_base(sx):
                assert rs.roots[rid].coords in allowed


def test_finite_pair_small_image_forces_small_source(atilde2, gtilde2):
    """In a finite maximal pair with nonzero pairing, a small reflection image
    of one simple forces the other simple to be small."""
    rng = random.Random(101)
    for rs, n in ((atilde2, 0), (gtilde2, 0), (gtilde2, 1)):
        pool = rs.roots_to_depth(4)
        for _ in range(30):
            a, b = rng.choice(pool).coords, rng.choice(pool).coords
            try:
                sub = plane_subsystem(rs, a, b)
            except ValueError:
                continue
            if not sub.finite or sub.gram_simples.is_zero():
                continue
            d1, d2 = sub.simples
            image = rs.reflect_by_root(d1, d2)
            if dominance_depth_vec(rs, image) <= n:
                assert dominance_depth_vec(rs, d1) <= n


def test_monotonicity_probe_reports_observed_inequality(gtilde2):
    """The finite-case probe carries the measured (unproven) inequality as a
    report-only observation, never as an assertion."""
    rs = gtilde2
    sub = plane_subsystem(rs, rs.basis_vec(0), rs.basis_vec(1))
    report = monotonicity_probe(rs, sub)
    assert report.observations
    assert "simple_exchange_inequality_observed" in report.observations[0]


def test_roots_found_lie_in_the_simple_cone(atilde2, gtilde2):
    from coxroots.order import ConeTester

    for rs in (atilde2, gtilde2):
        sub = plane_subsystem(rs, rs.basis_vec(0), rs.basis_vec(1))
        tester = ConeTester(rs, list(sub.simples))
        assert sub.roots_found
        for v in sub.roots_found:
            assert tester.contains(v)
