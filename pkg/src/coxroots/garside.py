"""Low elements, their enumeration, and Garside-shadow closure.

An element is n-low when its inversion set is the set of roots in the cone
over some collection of n-small roots; equivalently, when every root in the
base of its inversion set (the extreme rays) is n-small, since an inversion
set is always the cone closure of its base.

Enumeration of the n-low elements does not search the group directly
(nothing guarantees the set is closed under prefixes).  Instead, every
automaton state A is fed to the cone realization: a realized element x has
A inside N(x) = cone(A) and is therefore n-low, and conversely an n-low w
is realized from the state carrying its small inversion set.  States that
realize no element are reported verbatim; whether the state map restricted
to low elements is a bijection is an open question that the report measures
and never assumes.

A Garside shadow is a set containing the generators that is closed under
suffixes and under joins of bounded pairs.  The closure iterates exactly
that: suffix-close, then add all pairwise joins, until a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automaton import get_automaton, small_inversion_set, small_roots
from .depth import dominance_depth
from .order import join, realize_cone
from .roots import Element, IDENTITY, RootSystem


def is_low(rs: RootSystem, w: Element, n: int) -> bool:
    """True when every extreme ray of the inversion cone is n-small."""
    return all(dominance_depth(rs, rid) <= n for rid in rs.inversion_base(w))


@dataclass(frozen=True)
class LowReport:
    n: int
    elements: tuple  # all n-low elements, sorted by (length, word)
    realized_states: tuple  # state indices realized by some element
    unrealized_states: tuple  # state indices with no realizing element
    missed_states: tuple  # states that are not the small inversion set of any low element
    bijection_holds: bool

    @property
    def state_count(self) -> int:
        return len(self.realized_states) + len(self.unrealized_states)


def low_elements(rs: RootSystem, n: int) -> LowReport:
    """Enumerate the n-low elements through the automaton states."""
    auto = get_automaton(rs, n)
    realized, unrealized = [], []
    found = {}
    for idx in range(auto.state_count()):
        out = realize_cone(rs, auto.state_ids(idx))
        if out.element is None:
            unrealized.append(idx)
        else:
            realized.append(idx)
            found.setdefault(out.element, idx)
    elements = sorted(found, key=lambda e: e.sort_key())
    image = {auto.state_of(w) for w in elements}
    missed = tuple(i for i in range(auto.state_count()) if i not in image)
    report = LowReport(
        n=n,
        elements=tuple(elements),
        realized_states=tuple(realized),
        unrealized_states=tuple(unrealized),
        missed_states=missed,
        bijection_holds=not missed,
    )
    # soundness and completeness of the state route
    assert all(is_low(rs, w, n) for w in elements)
    return report


@dataclass(frozen=True)
class ShadowReport:
    elements: tuple  # sorted by (length, word)
    iterations: int
    per_iteration: tuple  # dicts: suffixes_added, join_pairs_added
    converged: bool

    def __contains__(self, w):
        return w in set(self.elements)


def garside_closure(rs: RootSystem, seed=None, max_iter: int = 30) -> ShadowReport:
    """Smallest suffix- and join-closed superset of the seed (default: the
    generators with the identity), grown iteratively.

    Stops at a fixpoint, or reports converged=False when max_iter rounds did
    not reach one; nothing is silently truncated.
    """
    if seed is None:
        current = {IDENTITY} | {Element((s,)) for s in range(rs.rank)}
    else:
        current = set(seed)
        if not current:
            raise ValueError("seed must be nonempty")
    history = []
    converged = False
    iterations = 0
    for _ in range(max_iter):
        iterations += 1
        suffixed = set()
        for w in current:
            suffixed |= rs.suffixes(w)
        suffix_added = len(suffixed - current)
        stage = current | suffixed
        joins_added = 0
        ordered = sorted(stage, key=lambda e: e.sort_key())
        nxt = set(stage)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                out = join(rs, u, v)
                if out.exists and out.element not in nxt:
                    nxt.add(out.element)
                    joins_added += 1
        history.append({"suffixes_added": suffix_added, "join_pairs_added": joins_added})
        if nxt == current:
            converged = True
            break
        current = nxt
    return ShadowReport(
        elements=tuple(sorted(current, key=lambda e: e.sort_key())),
        iterations=iterations,
        per_iteration=tuple(history),
        converged=converged,
    )


@dataclass(frozen=True)
class GarsideCheck:
    ok: bool
    missing_generators: tuple
    suffix_witnesses: tuple  # (element, missing suffix)
    join_witnesses: tuple  # (u, v, join not in the set)


def verify_garside(rs: RootSystem, elements) -> GarsideCheck:
    """Check the Garside-shadow axioms on an explicit finite set."""
    pool = set(elements)
    missing = tuple(s for s in range(rs.rank) if Element((s,)) not in pool)
    suffix_wit = []
    for w in sorted(pool, key=lambda e: e.sort_key()):
        for v in sorted(rs.suffixes(w), key=lambda e: e.sort_key()):
            if v not in pool:
                suffix_wit.append((w, v))
    join_wit = []
    ordered = sorted(pool, key=lambda e: e.sort_key())
    for i, u in enumerate(ordered):
        for v in ordered[i:]:
            out = join(rs, u, v)
            if out.exists and out.element not in pool:
                join_wit.append((u, v, out.element))
    return GarsideCheck(
        ok=not missing and not suffix_wit and not join_wit,
        missing_generators=missing,
        suffix_witnesses=tuple(suffix_wit),
        join_witnesses=tuple(join_wit),
    )
