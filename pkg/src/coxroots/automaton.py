"""Small roots and the reduced-word automaton built on them.

For a threshold n, the n-small roots are the positive roots of dominance
depth at most n; the set is finite.  They are enumerated by the same
breadth-first walk that generates the root table, pruning any root whose
dominance depth exceeds n.  The pruning is sound because both recurrences
move together: a depth-increasing step s(beta) requires B(alpha_s, beta) < 0,
and under that condition the dominance depth either stays (B > -1) or grows
by one (B <= -1), never drops.  So every small root of depth d + 1 has a
small parent at depth d, and an all-pruned frontier ends the walk.

The automaton has one state per realized small inversion set A (the
intersection of an inversion set with the small roots).  A transition by s
exists iff alpha_s is not in A and leads to {alpha_s} union (s(A) restricted
to small roots); this tracks left multiplication, so a word is fed in
reversed order to follow the element it spells.  Paths from the empty state
are exactly the reduced words, read backwards.

Element counting filters the same paths by a normal-form condition: a step
entering state A with letter s is canonical iff s is the smallest generator
whose simple root lies in A.  A path is all-canonical iff the word it
spells, read forward, is the lexicographically least reduced word of its
element, so counting canonical paths counts group elements by length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .depth import dominance_depth
from .roots import Element, RootSystem


@dataclass(frozen=True)
class SmallRootSet:
    n: int
    ids: tuple  # root ids, ordered by (depth, id)
    positions: dict  # root id -> bit position

    def __len__(self):
        return len(self.ids)

    def __contains__(self, rid):
        return rid in self.positions

    def mask_of(self, rids) -> int:
        mask = 0
        for rid in rids:
            mask |= 1 << self.positions[rid]
        return mask

    def ids_of(self, mask: int) -> tuple:
        return tuple(rid for pos, rid in enumerate(self.ids) if mask >> pos & 1)


def small_roots(rs: RootSystem, n: int) -> SmallRootSet:
    """All positive roots of dominance depth <= n, by pruned BFS."""
    if n < 0:
        raise ValueError("threshold must be nonnegative")
    cached = rs.small_sets.get(n)
    if cached is not None:
        return cached
    found = []
    level = []
    for s in range(rs.rank):
        rid = rs.root_id(rs.basis_vec(s))
        rs.dominance_cache.setdefault(rid, 0)
        level.append(rid)
        found.append(rid)
    seen = set(level)
    depth = 1
    while level:
        depth += 1
        rs.ensure_depth(depth)
        nxt = []
        for rid in level:
            beta = rs.roots[rid]
            base_depth = rs.dominance_cache[rid]
            for s in range(rs.rank):
                b = rs.form_simple(s, beta.coords)
                if b.sign() >= 0:
                    continue
                child_vec = rs.simple_reflect(s, beta.coords)
                cid = rs.root_id(child_vec)
                if cid in seen:
                    continue
                child_dd = base_depth + (1 if b.cmp_to_minus_one() <= 0 else 0)
                known = rs.dominance_cache.setdefault(cid, child_dd)
                assert known == child_dd  # path independence of the recurrence
                if child_dd <= n:
                    seen.add(cid)
                    nxt.append(cid)
                    found.append(cid)
        level = nxt
    found.sort(key=lambda rid: (rs.roots[rid].depth, rid))
    out = SmallRootSet(n, tuple(found), {rid: pos for pos, rid in enumerate(found)})
    rs.small_sets[n] = out
    return out


class ReducedWordAutomaton:
    """Deterministic automaton over small inversion sets (states as bitmasks)."""

    def __init__(self, rs: RootSystem, n: int):
        self.rs = rs
        self.n = n
        self.smalls = small_roots(rs, n)
        self._action = self._small_action_table()
        self.states: list[int] = [0]
        self._state_index: dict[int, int] = {0: 0}
        self.transitions: list[dict] = []
        self._build()

    # -- construction

    def _small_action_table(self):
        """act[s][pos] = bit position of s(root) when that image is small."""
        rs, sm = self.rs, self.smalls
        table = []
        for s in range(rs.rank):
            row = {}
            alpha_s = rs.root_id(rs.basis_vec(s))
            for pos, rid in enumerate(sm.ids):
                if rid == alpha_s:
                    continue
                image = rs.simple_reflect(s, rs.roots[rid].coords)
                iid = rs.root_id(image)
                tgt = sm.positions.get(iid)
                if tgt is not None:
                    row[pos] = tgt
            table.append(row)
        return table

    def _step(self, mask: int, s: int) -> int | None:
        """Target state mask, or None when alpha_s already lies in the state."""
        spos = self.smalls.positions[self.rs.root_id(self.rs.basis_vec(s))]
        if mask >> spos & 1:
            return None
        out = 1 << spos
        row = self._action[s]
        rest = mask
        while rest:
            low = rest & -rest
            pos = low.bit_length() - 1
            rest ^= low
            tgt = row.get(pos)
            if tgt is not None:
                out |= 1 << tgt
        return out

    def _build(self):
        cursor = 0
        while cursor < len(self.states):
            mask = self.states[cursor]
            trans = {}
            for s in range(self.rs.rank):
                tgt = self._step(mask, s)
                if tgt is None:
                    continue
                if tgt not in self._state_index:
                    self._state_index[tgt] = len(self.states)
                    self.states.append(tgt)
                trans[s] = self._state_index[tgt]
            self.transitions.append(trans)
            cursor += 1

    # -- queries

    @property
    def start(self) -> int:
        return 0

    def state_count(self) -> int:
        return len(self.states)

    def run_left(self, letters) -> int | None:
        """Feed successive left multiplications; None when a step dies."""
        idx = 0
        for s in letters:
            idx = self.transitions[idx].get(s)
            if idx is None:
                return None
        return idx

    def is_reduced(self, word) -> bool:
        """Words are read in written order, so the path feeds them reversed."""
        return self.run_left(reversed(tuple(word))) is not None

    def state_of(self, x: Element) -> int:
        idx = self.run_left(reversed(x.word))
        assert idx is not None  # canonical words are reduced
        return idx

    def state_ids(self, idx: int) -> tuple:
        return self.smalls.ids_of(self.states[idx])

    def states_containing(self, rids) -> list[int]:
        """Indices of states whose root set contains all the given roots."""
        for rid in rids:
            if rid not in self.smalls:
                raise ValueError("query roots must all be small for this automaton")
        want = self.smalls.mask_of(rids)
        return [i for i, mask in enumerate(self.states) if mask & want == want]

    # -- growth

    def _canonical_edges(self):
        """Transitions whose letter is the least generator marked in the
        target state; paths through these spell lex-least reduced words."""
        simple_pos = {s: self.smalls.positions[self.rs.root_id(self.rs.basis_vec(s))]
                      for s in range(self.rs.rank)}
        edges = []
        for idx, trans in enumerate(self.transitions):
            kept = {}
            for s, tgt in trans.items():
                mask = self.states[tgt]
                least = min(t for t in range(self.rs.rank) if mask >> simple_pos[t] & 1)
                if s == least:
                    kept[s] = tgt
            edges.append(kept)
        return edges

    def count_elements_by_length(self, max_len: int) -> list[int]:
        """Number of group elements of each length 0..max_len.

        Counts paths through canonical transitions only; agreement with a
        brute-force breadth-first element count is asserted in the tests.
        """
        edges = self._canonical_edges()
        counts = [1]
        current = {0: 1}
        for _ in range(max_len):
            nxt: dict[int, int] = {}
            for idx, mult in current.items():
                for _s, tgt in edges[idx].items():
                    nxt[tgt] = nxt.get(tgt, 0) + mult
            counts.append(sum(nxt.values()))
            current = nxt
        return counts

    # -- export

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "small_roots": [
                {
                    "id": rid,
                    "coords": self.rs.coords_str(self.rs.roots[rid].coords),
                    "depth": self.rs.roots[rid].depth,
                    "dominance_depth": dominance_depth(self.rs, rid),
                }
                for rid in self.smalls.ids
            ],
            "start": 0,
            "states": [sorted(self.state_ids(i)) for i in range(len(self.states))],
            "transitions": [
                {"from": i, "gen": s + 1, "to": tgt}
                for i, trans in enumerate(self.transitions)
                for s, tgt in sorted(trans.items())
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph reduced_words {", "  rankdir=LR;"]
        for i in range(len(self.states)):
            label = "{" + ",".join(self.rs.coords_str(self.rs.roots[r].coords)
                                   for r in self.state_ids(i)) + "}"
            shape = "doublecircle" if i == 0 else "circle"
            lines.append(f'  q{i} [label="{label}", shape={shape}];')
        for i, trans in enumerate(self.transitions):
            for s, tgt in sorted(trans.items()):
                lines.append(f'  q{i} -> q{tgt} [label="{s + 1}"];')
        lines.append("}")
        return "\n".join(lines)


def get_automaton(rs: RootSystem, n: int) -> ReducedWordAutomaton:
    auto = rs.automata.get(n)
    if auto is None:
        auto = ReducedWordAutomaton(rs, n)
        rs.automata[n] = auto
    return auto


def small_inversion_set(rs: RootSystem, x: Element, n: int) -> frozenset:
    """Small part of an inversion set, computed directly (not via states)."""
    sm = small_roots(rs, n)
    return frozenset(rid for rid in rs.inversion_set(x) if rid in sm)
