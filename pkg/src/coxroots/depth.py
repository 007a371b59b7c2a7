"""Depth statistics on roots: dominance depth, dominance sets, and the
family of coideal length functions.

The dominance depth of a positive root counts the positive roots it
strictly dominates (beta dominates alpha when every inversion set containing
beta contains alpha).  It obeys a local recurrence under simple reflections,
driven by where B(alpha_s, beta) falls relative to -1 and 1: at or below -1
it grows by one, strictly between it is unchanged, at or above 1 it drops by
one, and simple roots sit at zero.  Walking any reflection path from a
simple root therefore computes it exactly.

The same quantity is recovered independently from the closed formula
 Dom(beta) = { gamma in N(s_beta) : B(gamma, beta) >= 1 and the reflection
 in gamma is shorter than the reflection in beta },
which the test suite uses as a cross-oracle.

A coideal X of the positive reals is empty, all of R+, or a closed or open
ray; the X-length of a positive root beta counts the roots alpha in
N(s_beta) with B(alpha, beta) in X (negated on negative roots).  Its two
distinguished specializations are the reflection length (X = R+) and
2 * dominance depth + 1 (X = [1, oo)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import RootSystem


# ---------------------------------------------------------------------------
# dominance depth

def _dominance_walk(rs: RootSystem, word, gen) -> int:
    """Accumulate the recurrence along vec = word(alpha_gen)."""
    depth = 0
    vec = rs.basis_vec(gen)
    for s in reversed(word):
        b = rs.form_simple(s, vec)
        if b.cmp_to_minus_one() <= 0:
            depth += 1
        elif b.cmp_to_one() >= 0:
            depth -= 1
        vec = rs.simple_reflect(s, vec)
    return depth


def dominance_depth(rs: RootSystem, rid: int) -> int:
    """Dominance depth of a table root, cached."""
    hit = rs.dominance_cache.get(rid)
    if hit is None:
        r = rs.roots[rid]
        hit = _dominance_walk(rs, r.witness_word, r.witness_gen)
        rs.dominance_cache[rid] = hit
    return hit


def dominance_depth_vec(rs: RootSystem, vec) -> int:
    """Dominance depth of an arbitrary positive root vector, without
    registering it in the table."""
    key = rs.coord_key(vec)
    rid = rs._index.get(key)
    if rid is not None:
        return dominance_depth(rs, rid)
    word, gen = rs.descend_to_simple(vec)
    return _dominance_walk(rs, word, gen)


def dominance_set(rs: RootSystem, rid: int) -> frozenset:
    """Roots strictly dominated by the given root, via the inversion set of
    its reflection."""
    beta = rs.roots[rid].coords
    own_length = len(rs.reflection(rid).word)
    out = set()
    for gid in rs.reflection_inversions(rid):
        if gid == rid:
            continue
        gamma = rs.roots[gid].coords
        if rs.form(gamma, beta).cmp_to_one() >= 0 and len(rs.reflection(gid).word) < own_length:
            out.add(gid)
    return frozenset(out)


def dominates(rs: RootSystem, a_rid: int, b_rid: int) -> bool:
    """True when the second root dominates the first (reflexively)."""
    return a_rid == b_rid or a_rid in dominance_set(rs, b_rid)


# ---------------------------------------------------------------------------
# coideal length functions

@dataclass(frozen=True)
class Coideal:
    """An order coideal of the positive reals: Empty, All, or a ray."""

    kind: str  # "empty" | "all" | "closed" | "open"
    threshold: object = None  # AlgebraicScalar for rays, > 0

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def all(cls):
        return cls("all")

    @classmethod
    def at_least(cls, a):
        return cls("closed", a)

    @classmethod
    def more_than(cls, a):
        return cls("open", a)

    def contains(self, x) -> bool:
        if self.kind == "empty":
            return False
        if self.kind == "all":
            return x.sign() > 0
        c = x.compare(self.threshold)
        return c >= 0 if self.kind == "closed" else c > 0

    def contains_one(self, field) -> bool:
        return self.contains(field.one)

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "all":
            return "all"
        op = ">=" if self.kind == "closed" else ">"
        return f"{op}{self.threshold.exact_str()}"


def parse_coideal(rs: RootSystem, text: str) -> Coideal:
    """CLI forms: ``all``, ``empty``, ``ge:a``, ``gt:a`` with exact thresholds."""
    from .scalar import parse_scalar

    text = text.strip()
    if text == "all":
        return Coideal.all()
    if text == "empty":
        return Coideal.empty()
    if text.startswith("ge:"):
        return Coideal.at_least(parse_scalar(rs.field, text[3:]))
    if text.startswith("gt:"):
        return Coideal.more_than(parse_scalar(rs.field, text[3:]))
    raise ValueError(f"cannot parse coideal {text!r}; use all|empty|ge:a|gt:a")


def coideal_length(rs: RootSystem, vec, x: Coideal) -> int:
    """Signed count of alpha in N(s_beta) with B(alpha, beta) in X."""
    sgn = rs.vec_sign(vec)
    beta = vec if sgn > 0 else tuple(-c for c in vec)
    rid = rs.root_id(beta)
    count = 0
    for gid in rs.reflection_inversions(rid):
        if x.contains(rs.form(rs.roots[gid].coords, beta)):
            count += 1
    return sgn * count


def coideal_depth(rs: RootSystem, rid: int, x: Coideal) -> int:
    """(d_X - 1)/2 when 1 is in X, d_X/2 otherwise; always an integer."""
    d = coideal_length(rs, rs.roots[rid].coords, x)
    if x.contains_one(rs.field):
        assert d % 2 == 1
        return (d - 1) // 2
    assert d % 2 == 0
    return d // 2
