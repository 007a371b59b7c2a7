"""Maximal dihedral reflection subsystems and the probes built on them.

A plane spanned by two independent roots meets the root system in a rank-2
subsystem whose canonical simple pair is characterized by the certificate
 N(s_delta) intersected with the plane = {delta};
equivalently the two simples represent the extreme rays of the cone over
the plane's positive roots.  Candidate roots are collected from the table
up to a depth cap and pushed outward by mutual reflections; the two extreme
candidates are then certified exactly.  Certification failure raises
CapExceeded (never a wrong simple pair), and callers may retry deeper.

Once a pair is certified the subsystem's positive roots are regenerated
from the pair alone by the rank-2 alternating-word recurrence, in segment
order, so no later check depends on how deep the global table happens to
be.  The subsystem is finite exactly when the form value of the pair lies
strictly above -1.

Enumerating every maximal dihedral subsystem in which a root gamma is not
simple only requires planes spanned by gamma and a member of N(s_gamma):
a non-simple gamma has at least three plane roots in N(s_gamma), and in a
rank-2 system that set contains a canonical simple, so the plane is hit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .depth import dominance_depth_vec
from .roots import Element, RootSystem


class CapExceeded(RuntimeError):
    """Raised when a plane analysis cannot certify a simple pair within its
    depth cap; distinct from any mathematical failure."""

    def __init__(self, message, plane_key=None, cap=None):
        super().__init__(message)
        self.plane_key = plane_key
        self.cap = cap


class Plane:
    """Exact 2-dimensional span with membership and planar coordinates."""

    def __init__(self, rs: RootSystem, v1, v2):
        self.rs = rs
        field = rs.field
        rows = [list(v1), list(v2)]
        basis, pivots = [], []
        for col in range(rs.rank):
            pivot = next((r for r in rows if not r[col].is_zero()), None)
            if pivot is None:
                continue
            rows.remove(pivot)
            inv = pivot[col].inverse()
            pivot = [x * inv for x in pivot]
            rows = [[x - r[col] * p for x, p in zip(r, pivot)] if not r[col].is_zero() else r
                    for r in rows]
            basis = [[x - b[col] * p for x, p in zip(b, pivot)] if not b[col].is_zero() else b
                     for b in basis]
            basis.append(pivot)
            pivots.append(col)
        if len(pivots) != 2:
            raise ValueError("spanning vectors are linearly dependent")
        order = sorted(range(2), key=lambda i: pivots[i])
        self.basis = [tuple(basis[i]) for i in order]
        self.pivots = [pivots[i] for i in order]
        self.key = tuple(tuple(x.coeffs for x in b) for b in self.basis)
        self._zero = field.zero

    def coords(self, vec):
        """Planar coordinates, or None when vec lies outside the span."""
        c = tuple(vec[p] for p in self.pivots)
        recon = [self._zero] * self.rs.rank
        for coef, b in zip(c, self.basis):
            if not coef.is_zero():
                for i in range(self.rs.rank):
                    recon[i] = recon[i] + coef * b[i]
        return c if tuple(recon) == tuple(vec) else None

    def contains(self, vec) -> bool:
        return self.coords(vec) is not None


@dataclass(frozen=True)
class DihedralSubsystem:
    plane_key: tuple
    simples: tuple  # certified canonical pair, deterministic order
    simple_ids: tuple
    finite: bool
    gram_simples: object  # B(delta1, delta2)
    size: int | None  # number of positive roots when finite
    roots_found: tuple  # plane roots seen during discovery, cap-bounded
    cap_used: int


def _plane_members(rs: RootSystem, plane: Plane, vecs):
    return [v for v in vecs if plane.contains(v)]


def _certify_simple(rs: RootSystem, plane: Plane, vec) -> bool:
    """Simplicity certificate: the only plane root inverted by the reflection in
    vec is vec itself.  Works on raw vectors; no table growth."""
    word, gen = rs.descend_to_simple(vec)
    refl = rs.normalize(word + (gen,) + tuple(reversed(word)))
    members = _plane_members(rs, plane, rs.inversion_vectors(refl.word))
    return len(members) == 1 and members[0] == vec


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _extremes(rs: RootSystem, plane: Plane, vecs):
    """The two cone-extreme candidates among plane roots, by planar cross
    products (positive roots lie in a pointed cone, so the order is total)."""
    coords = [(v, plane.coords(v)) for v in vecs]
    u, cu = coords[0]
    v, cv = coords[0]
    for w, cw in coords[1:]:
        if _cross2(cu, cw).sign() < 0:
            u, cu = w, cw
        if _cross2(cv, cw).sign() > 0:
            v, cv = w, cw
    for w, cw in coords:
        if _cross2(cu, cw).sign() < 0 or _cross2(cw, cv).sign() < 0:
            raise CapExceeded("plane candidates are not in a pointed cone", plane.key)
    return u, v


def plane_subsystem(rs: RootSystem, v1, v2, cap: int | None = None) -> DihedralSubsystem:
    """Certified maximal rank-2 subsystem of the plane spanned by two roots."""
    plane = Plane(rs, v1, v2)
    hit = rs.plane_cache.get(plane.key)
    if hit is not None:
        return hit
    if cap is None:
        cap = max(8, 2 + max(rs.root_depth_of_vec(v1), rs.root_depth_of_vec(v2)))
    found = {v1, v2}
    for r in rs.roots_to_depth(cap):
        if plane.contains(r.coords):
            found.add(r.coords)
    # push outward: reflecting plane roots in each other stays in the plane
    for _ in range(6):
        ext = set()
        for a in found:
            for b in found:
                if a is b:
                    continue
                image = rs.reflect_by_root(a, b)
                if image not in found and rs.vec_sign(image) > 0:
                    ext.add(image)
        if not ext:
            break
        found |= ext
        if len(found) > 200:
            break
    u, v = _extremes(rs, plane, sorted(found, key=rs.coord_key))
    if not (_certify_simple(rs, plane, u) and _certify_simple(rs, plane, v)):
        raise CapExceeded(
            f"could not certify a canonical simple pair within depth {cap}",
            plane.key, cap,
        )
    id_u, id_v = rs.root_id(u), rs.root_id(v)
    if (rs.roots[id_v].depth, id_v) < (rs.roots[id_u].depth, id_u):
        u, v, id_u, id_v = v, u, id_v, id_u
    g = rs.form(u, v)
    assert g.sign() <= 0  # canonical pairs never pair positively
    finite = g.cmp_to_minus_one() > 0
    size = None
    if finite:
        chain = positive_chain(rs, u, v)
        size = len(chain)
    sub = DihedralSubsystem(plane.key, (u, v), (id_u, id_v), finite, g, size,
                            tuple(sorted(found, key=rs.coord_key)), cap)
    rs.plane_cache[plane.key] = sub
    return sub


def positive_chain(rs: RootSystem, d1, d2, count: int | None = None):
    """Positive roots of the rank-2 system with simple pair (d1, d2), walked
    from the d1 end in segment order.

    Finite systems return the complete list (ending at d2); infinite ones
    return ``count`` entries from the d1 side.
    """
    out = []
    prefix = []
    limit = count if count is not None else 2000
    for i in range(limit):
        seed = d1 if i % 2 == 0 else d2
        vec = seed
        for r in reversed(prefix):
            vec = rs.reflect_by_root(r, vec)
        out.append(vec)
        if count is None and vec == d2:
            return out
        prefix.append(seed)
    if count is None:
        raise AssertionError("finite chain failed to close")
    return out


def segment(rs: RootSystem, sub: DihedralSubsystem):
    """Full positive system of a finite subsystem, in segment order."""
    assert sub.finite
    return positive_chain(rs, sub.simples[0], sub.simples[1])


def local_reflection_length(rs: RootSystem, sub: DihedralSubsystem, vec) -> int:
    """Length of the reflection in vec inside the subsystem: the exact count
    of its inversions lying in the plane."""
    plane = Plane(rs, sub.simples[0], sub.simples[1])
    if not plane.contains(vec):
        raise ValueError("root does not lie in the subsystem plane")
    word, gen = rs.descend_to_simple(vec)
    refl = rs.normalize(word + (gen,) + tuple(reversed(word)))
    return len(_plane_members(rs, plane, rs.inversion_vectors(refl.word)))


def companion_simple(rs: RootSystem, s: int, vec) -> tuple:
    """The canonical simple paired with alpha_s in the maximal dihedral
    subsystem of the plane through alpha_s and the given root."""
    alpha = rs.basis_vec(s)
    if vec == alpha:
        raise ValueError("companion undefined on alpha_s itself")
    sub = plane_subsystem(rs, alpha, vec)
    if sub.simples[0] == alpha:
        return sub.simples[1]
    if sub.simples[1] == alpha:
        return sub.simples[0]
    raise AssertionError("a global simple root is canonical in every subsystem")


def planes_containing(rs: RootSystem, rid: int, cap: int | None = None):
    """Every maximal dihedral subsystem in which the root is positive and
    NOT canonical-simple (complete by the inversion-set argument above)."""
    gamma = rs.roots[rid].coords
    out = []
    seen = set()
    for did in sorted(rs.reflection_inversions(rid)):
        if did == rid:
            continue
        delta = rs.roots[did].coords
        plane = Plane(rs, gamma, delta)
        if plane.key in seen:
            continue
        seen.add(plane.key)
        sub = plane_subsystem(rs, gamma, delta, cap)
        if gamma not in sub.simples:
            out.append(sub)
    return out


# ---------------------------------------------------------------------------
# probes

@dataclass(frozen=True)
class CheckReport:
    name: str
    status: str  # "pass" | "fail" | "inconclusive"
    witnesses: tuple
    caps_hit: tuple
    observations: tuple = ()  # measured-only facts, never asserted

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "inconclusive": 2}[self.status]


def _finish(name, witnesses, caps, observations=()):
    if witnesses:
        status = "fail"
    elif caps:
        status = "inconclusive"
    else:
        status = "pass"
    return CheckReport(name, status, tuple(witnesses), tuple(caps), tuple(observations))


def check_bipodal(rs: RootSystem, rids, cap: int | None = None) -> CheckReport:
    """Whenever the set contains a non-simple root of a maximal dihedral
    subsystem, it must contain both canonical simples."""
    pool = frozenset(rids)
    witnesses, caps = [], []
    for rid in sorted(pool):
        try:
            subs = planes_containing(rs, rid, cap)
        except CapExceeded as exc:
            caps.append({"root": rid, "cap": exc.cap})
            continue
        for sub in subs:
            for vec, sid in zip(sub.simples, sub.simple_ids):
                if sid not in pool:
                    witnesses.append({
                        "root": rid,
                        "plane": sub.plane_key,
                        "missing_simple": rs.coords_str(vec),
                    })
    return _finish("bipodal", witnesses, caps)


def check_balanced(rs: RootSystem, rids, cap: int | None = None) -> CheckReport:
    """With a root gamma the set must contain every subsystem root of
    strictly smaller local reflection length, in every containing maximal
    dihedral subsystem."""
    pool = frozenset(rids)
    pool_vecs = {rs.roots[r].coords for r in pool}
    witnesses, caps = [], []
    for rid in sorted(pool):
        gamma = rs.roots[rid].coords
        try:
            subs = planes_containing(rs, rid, cap)
        except CapExceeded as exc:
            caps.append({"root": rid, "cap": exc.cap})
            continue
        for sub in subs:
            if sub.finite:
                chain = segment(rs, sub)
                pos = chain.index(gamma) + 1
                size = len(chain)
                own = 2 * min(pos, size - pos + 1) - 1
                smaller = [v for j, v in enumerate(chain, start=1)
                           if 2 * min(j, size - j + 1) - 1 < own]
            else:
                side1 = positive_chain(rs, sub.simples[0], sub.simples[1], 80)
                side2 = positive_chain(rs, sub.simples[1], sub.simples[0], 80)
                pos = None
                for chain in (side1, side2):
                    if gamma in chain:
                        pos = chain.index(gamma) + 1
                        break
                if pos is None:
                    caps.append({"root": rid, "plane": sub.plane_key, "cap": 80})
                    continue
                smaller = side1[: pos - 1] + side2[: pos - 1]
            for beta in smaller:
                if beta not in pool_vecs:
                    detail = {
                        "root": rs.coords_str(gamma),
                        "missing": rs.coords_str(beta),
                        "plane": sub.plane_key,
                    }
                    if sub.finite:
                        values = tuple(dominance_depth_vec(rs, v) for v in chain)
                        if tuple(reversed(values)) < values:
                            values = tuple(reversed(values))
                        detail["segment_dominance_depths"] = values
                    witnesses.append(detail)
    return _finish("balanced", witnesses, caps)


def check_heart(rs: RootSystem, cap: int | None = None) -> CheckReport:
    """For every small root gamma that is non-simple in a maximal dihedral
    subsystem, every simple root alpha outside the pair with B(alpha, gamma)
    positive must pair with both canonical simples strictly between -1 and 1."""
    from .automaton import small_roots

    sm = small_roots(rs, 0)
    simples = {rs.root_id(rs.basis_vec(s)) for s in range(rs.rank)}
    witnesses, caps = [], []
    for rid in sorted(set(sm.ids) - simples):
        gamma = rs.roots[rid].coords
        try:
            subs = planes_containing(rs, rid, cap)
        except CapExceeded as exc:
            caps.append({"root": rid, "cap": exc.cap})
            continue
        for sub in subs:
            for s in range(rs.rank):
                alpha = rs.basis_vec(s)
                if alpha in sub.simples:
                    continue
                if rs.form_simple(s, gamma).sign() <= 0:
                    continue
                for beta in sub.simples:
                    b = rs.form_simple(s, beta)
                    if not (b.cmp_to_minus_one() > 0 and b.cmp_to_one() < 0):
                        witnesses.append({
                            "root": rid,
                            "outside_simple": s + 1,
                            "pair_value": b.exact_str(),
                        })
    return _finish("heart", witnesses, caps)


def monotonicity_probe(rs: RootSystem, sub: DihedralSubsystem, cap: int = 8) -> CheckReport:
    """Dominance depth against local reflection length within one subsystem.

    Infinite subsystems: strictly increasing with the local length.  Finite
    subsystems: weakly increasing along conjugation steps that raise the
    local length by two.
    """
    witnesses = []
    observations = []
    if not sub.finite:
        side1 = positive_chain(rs, sub.simples[0], sub.simples[1], cap)
        side2 = positive_chain(rs, sub.simples[1], sub.simples[0], cap)
        d1 = [dominance_depth_vec(rs, v) for v in side1]
        d2 = [dominance_depth_vec(rs, v) for v in side2]
        for a in (d1, d2):
            for b in (d1, d2):
                for i in range(len(a)):
                    for j in range(i + 1, len(b)):
                        if not a[i] < b[j]:
                            witnesses.append({"positions": (i + 1, j + 1),
                                              "values": (a[i], b[j])})
    else:
        chain = segment(rs, sub)
        size = len(chain)
        lengths = [2 * min(i, size - i + 1) - 1 for i in range(1, size + 1)]
        for i, gamma in enumerate(chain):
            for a in sub.simples:
                delta = rs.reflect_by_root(a, gamma)
                if rs.vec_sign(delta) < 0:
                    continue
                j = chain.index(delta)
                if lengths[j] == lengths[i] + 2:
                    if not dominance_depth_vec(rs, gamma) <= dominance_depth_vec(rs, delta):
                        witnesses.append({
                            "root": rs.coords_str(gamma),
                            "image": rs.coords_str(delta),
                        })
        # measured but unproven in general: reflecting one canonical simple
        # in the other never lowers the dominance depth
        d1, d2 = sub.simples
        observed = (dominance_depth_vec(rs, rs.reflect_by_root(d1, d2))
                    >= dominance_depth_vec(rs, d2)
                    and dominance_depth_vec(rs, rs.reflect_by_root(d2, d1))
                    >= dominance_depth_vec(rs, d1))
        observations.append({"simple_exchange_inequality_observed": observed})
    return _finish("monotonicity", witnesses, [], observations)
