"""Weak-order lattice operations and the two root-system orders.

The meet of two elements is computed by the descent recursion: strip the
smallest common left descent and recurse; the stripped word is exactly the
canonical form of the meet.

Joins go through cones.  For a finite set A of positive roots, an element x
with N(x) equal to the roots in cone(A) exists iff A is bounded and the
cone is realized; boundedness is decided exactly by the automaton at
threshold m = max dominance depth over A, because A is contained in N(x)
iff the m-small part of N(x), a state of that automaton, contains A.  When
some state contains A, a breadth-first search over elements whose inversion
sets stay inside cone(A) finds the realizing element if there is one; the
search space is a finite weak-order interval, so no depth cap is needed.

Cone membership itself is decided over the scalar field.  The general
routine eliminates the coordinates of a would-be separating functional by
Fourier-Motzkin (the variable count is the span dimension, at most the
rank).  For spans of dimension up to three the separating-functional test
is replaced by an exact facet description of the cone, computed once per
cone from pairwise cross products; the two routes are cross-checked in the
tests and must agree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import get_automaton
from .depth import dominance_depth
from .roots import Element, IDENTITY, RootSystem


# ---------------------------------------------------------------------------
# meet

def meet(rs: RootSystem, u: Element, v: Element) -> Element:
    out = []
    while True:
        common = set(rs.left_descents(u)) & set(rs.left_descents(v))
        if not common:
            break
        s = min(common)
        out.append(s)
        u = rs.left_quotient(s, u)
        v = rs.left_quotient(s, v)
    return Element(tuple(out))


# ---------------------------------------------------------------------------
# exact cone membership

def _fm_feasible(rows, nvars: int) -> bool:
    """Feasibility of { sum_i c_i x_i >= rhs } by Fourier-Motzkin elimination."""

    def normalized(coeffs, rhs):
        for c in coeffs:
            s = c.sign()
            if s != 0:
                scale = (c if s > 0 else -c).inverse()
                return tuple(x * scale for x in coeffs), rhs * scale
        return coeffs, rhs

    work = []
    seen = set()
    for coeffs, rhs in rows:
        coeffs, rhs = normalized(coeffs, rhs)
        key = (tuple(c.coeffs for c in coeffs), rhs.coeffs)
        if key not in seen:
            seen.add(key)
            work.append((coeffs, rhs))

    for var in range(nvars):
        pos, neg, keep = [], [], []
        for coeffs, rhs in work:
            s = coeffs[var].sign()
            if s > 0:
                pos.append((coeffs, rhs))
            elif s < 0:
                neg.append((coeffs, rhs))
            else:
                keep.append((coeffs, rhs))
        seen = set()
        out = []
        for coeffs, rhs in keep:
            key = (tuple(c.coeffs for c in coeffs), rhs.coeffs)
            if key not in seen:
                seen.add(key)
                out.append((coeffs, rhs))
        for pc, pr in pos:
            a = pc[var]
            for nc, nr in neg:
                b = -nc[var]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                rhs = b * pr + a * nr
                coeffs, rhs = normalized(coeffs, rhs)
                key = (tuple(c.coeffs for c in coeffs), rhs.coeffs)
                if key not in seen:
                    seen.add(key)
                    out.append((coeffs, rhs))
        work = out

    return all(rhs.sign() <= 0 for _, rhs in work)


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    acc = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        acc = acc + x * y
    return acc


class ConeTester:
    """Membership oracle for the cone spanned by a fixed set of vectors.

    Precomputes a description of the cone once, after which each query is a
    handful of exact sign tests.
    """

    def __init__(self, rs: RootSystem, gens):
        self.rs = rs
        self.field = rs.field
        self.gens = [tuple(v) for v in gens]
        self._echelon()
        self.mode = "empty" if not self.gens else None
        if self.mode is None:
            k = self.dim
            self.gcoords = [self._span_coords(g) for g in self.gens]
            if k == 1:
                signs = {c[0].sign() for c in self.gcoords}
                self.mode = "line" if signs == {1, -1} else "ray"
                self.ray_sign = 1 if 1 in signs else -1
            elif k == 2 and self._setup_planar():
                self.mode = "planar"
            elif k == 3 and self._setup_facets():
                self.mode = "facets"
            else:
                self.mode = "fm"

    # -- span handling

    def _echelon(self):
        """Reduced row echelon basis of the span of the generators."""
        zero = self.field.zero
        rows = [list(g) for g in self.gens]
        basis, pivots = [], []
        for col in range(self.rs.rank):
            pivot_row = None
            for r in rows:
                if not r[col].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            rows.remove(pivot_row)
            inv = pivot_row[col].inverse()
            pivot_row = [x * inv for x in pivot_row]
            rows = [
                [x - r[col] * p for x, p in zip(r, pivot_row)] if not r[col].is_zero() else r
                for r in rows
            ]
            basis = [[x - b[col] * p for x, p in zip(b, pivot_row)] if not b[col].is_zero() else b
                     for b in basis]
            basis.append(pivot_row)
            pivots.append(col)
        order = sorted(range(len(pivots)), key=lambda i: pivots[i])
        self.basis = [tuple(basis[i]) for i in order]
        self.pivots = [pivots[i] for i in order]
        self.dim = len(self.pivots)

    def _span_coords(self, vec):
        """Coordinates of vec over the echelon basis, or None if outside."""
        coords = tuple(vec[p] for p in self.pivots)
        recon = [self.field.zero] * self.rs.rank
        for c, b in zip(coords, self.basis):
            if not c.is_zero():
                for i in range(self.rs.rank):
                    recon[i] = recon[i] + c * b[i]
        if tuple(recon) != tuple(vec):
            return None
        return coords

    # -- specialized descriptions

    def _setup_planar(self) -> bool:
        u = v = self.gcoords[0]
        for g in self.gcoords[1:]:
            if _cross2(u, g).sign() < 0:
                u = g
            if _cross2(v, g).sign() > 0:
                v = g
        for g in self.gcoords:
            if _cross2(u, g).sign() < 0 or _cross2(g, v).sign() < 0:
                return False  # not pointed within a half-plane; use FM
        self.planar_edges = (u, v)
        return True

    def _setup_facets(self) -> bool:
        normals = []
        seen = set()
        m = len(self.gcoords)
        for i in range(m):
            for j in range(i + 1, m):
                n = _cross3(self.gcoords[i], self.gcoords[j])
                if all(x.is_zero() for x in n):
                    continue
                lo = hi = 0
                for g in self.gcoords:
                    s = _dot(n, g).sign()
                    lo = min(lo, s)
                    hi = max(hi, s)
                    if lo < 0 and hi > 0:
                        break
                if lo < 0 and hi > 0:
                    continue
                if lo < 0:
                    n = tuple(-x for x in n)
                key = None
                for x in n:
                    s = x.sign()
                    if s != 0:
                        scale = (x if s > 0 else -x).inverse()
                        key = tuple((y * scale).coeffs for y in n)
                        break
                if key not in seen:
                    seen.add(key)
                    normals.append(n)
        self.normals = normals
        return True

    # -- queries

    def contains(self, vec) -> bool:
        vec = tuple(vec)
        if all(x.is_zero() for x in vec):
            return True
        if self.mode == "empty":
            return False
        coords = self._span_coords(vec)
        if coords is None:
            return False
        if self.mode == "line":
            return True
        if self.mode == "ray":
            return coords[0].sign() == self.ray_sign
        if self.mode == "planar":
            u, v = self.planar_edges
            return _cross2(u, coords).sign() >= 0 and _cross2(coords, v).sign() >= 0
        if self.mode == "facets":
            return all(_dot(n, coords).sign() >= 0 for n in self.normals)
        return self._fm_contains(coords)

    def _fm_contains(self, coords) -> bool:
        one = self.field.one
        zero = self.field.zero
        rows = [(g, zero) for g in self.gcoords]
        rows.append((tuple(-c for c in coords), one))
        # a separating functional exists iff vec is outside the cone
        return not _fm_feasible(rows, self.dim)


def cone_member(rs: RootSystem, vec, gens) -> bool:
    """Exact test for vec in the nonnegative span of gens."""
    return ConeTester(rs, gens).contains(vec)


# ---------------------------------------------------------------------------
# cone realization and joins

@dataclass(frozen=True)
class ConeRealization:
    element: Element | None
    bounded: bool
    witness_state: int | None
    threshold: int


def realize_cone(rs: RootSystem, rids) -> ConeRealization:
    """The unique element whose inversion set is exactly the roots in the
    cone over the given positive roots, when such an element exists.

    An unbounded certificate (no automaton state contains the set) is
    distinguished from a bounded set whose cone is realized by no inversion
    set; the latter exhausts the finite search interval and reports bounded
    with no element.
    """
    rids = sorted(set(rids))
    if not rids:
        return ConeRealization(IDENTITY, True, None, 0)
    m = max(dominance_depth(rs, rid) for rid in rids)
    auto = get_automaton(rs, m)
    hosts = auto.states_containing(rids)
    if not hosts:
        return ConeRealization(None, False, None, m)
    tester = ConeTester(rs, [rs.roots[rid].coords for rid in rids])
    want = frozenset(rids)
    queue = deque([(IDENTITY, frozenset())])
    visited = {IDENTITY}
    while queue:
        x, inv = queue.popleft()
        if want <= inv:
            return ConeRealization(x, True, hosts[0], m)
        for s in range(rs.rank):
            vec = rs.act_element(x, rs.basis_vec(s))
            if rs.vec_sign(vec) < 0:
                continue
            if not tester.contains(vec):
                continue
            y = rs.normalize(x.word + (s,))
            if y not in visited:
                visited.add(y)
                queue.append((y, inv | {rs.root_id(vec)}))
    return ConeRealization(None, True, hosts[0], m)


@dataclass(frozen=True)
class JoinOutcome:
    exists: bool
    element: Element | None
    witness_state: int | None

    def __str__(self):
        return str(self.element) if self.exists else "unbounded"


def join(rs: RootSystem, u: Element, v: Element) -> JoinOutcome:
    """Least upper bound in the weak order, or an unboundedness certificate."""
    key = tuple(sorted((u.word, v.word)))
    hit = rs.join_cache.get(key)
    if hit is not None:
        return hit
    ids = rs.inversion_set(u) | rs.inversion_set(v)
    real = realize_cone(rs, ids)
    if real.element is None:
        # a bounded pair always realizes: its join's inversion set is the cone
        assert not real.bounded, "bounded pair failed to realize its join"
        out = JoinOutcome(False, None, None)
    else:
        out = JoinOutcome(True, real.element, real.witness_state)
    rs.join_cache[key] = out
    return out


def bounded_pair(rs: RootSystem, u: Element, v: Element) -> bool:
    return join(rs, u, v).exists


# ---------------------------------------------------------------------------
# weak and Bruhat orders on the root system

@dataclass(frozen=True)
class RootPosetEdge:
    source: tuple
    target: tuple
    kind: str  # "weak" or "bruhat"
    mediator: tuple  # the reflecting root (simple for weak covers)
    coefficient: object  # -2 B(mediator, source), positive


def root_weak_covers(rs: RootSystem, vec) -> list[RootPosetEdge]:
    """Upward covers beta -> s_gamma(beta) for simple gamma with B(gamma, beta) < 0."""
    out = []
    vec = tuple(vec)
    for s in range(rs.rank):
        b = rs.form_simple(s, vec)
        if b.sign() < 0:
            out.append(RootPosetEdge(vec, rs.simple_reflect(s, vec), "weak",
                                     rs.basis_vec(s), -(b + b)))
    return out


def root_bruhat_steps(rs: RootSystem, vec, cap: int = 6) -> list[RootPosetEdge]:
    """Upward steps through any positive root of depth at most cap."""
    out = []
    vec = tuple(vec)
    for r in rs.roots_to_depth(cap):
        b = rs.form(r.coords, vec)
        if b.sign() < 0:
            out.append(RootPosetEdge(vec, rs.reflect_by_root(r.coords, vec), "bruhat",
                                     r.coords, -(b + b)))
    return out


@dataclass(frozen=True)
class ChainLabels:
    simple_labels: tuple  # generators beta_1..beta_n applied along the chain
    root_labels: tuple  # gamma_i = s_(beta_n)...s_(beta_(i+1))(beta_i)
    numeric_labels: tuple  # c_i = B(beta_i, alpha_i) = B(gamma_i, endpoint)
    element: Element  # s_(beta_n) ... s_(beta_1)


def chain_labels(rs: RootSystem, chain) -> ChainLabels:
    """Labels of a maximal chain of weak covers on roots, with the length and
    inversion-set identities verified along the way."""
    chain = [tuple(v) for v in chain]
    gens = []
    for prev, cur in zip(chain, chain[1:]):
        step = None
        for s in range(rs.rank):
            if rs.form_simple(s, prev).sign() < 0 and rs.simple_reflect(s, prev) == cur:
                step = s
                break
        if step is None:
            raise ValueError("consecutive entries are not a weak cover on roots")
        gens.append(step)
    n = len(gens)
    word = tuple(reversed(gens))  # s_(beta_n) ... s_(beta_1)
    elem = rs.normalize(word)
    if len(elem.word) != n:
        raise ValueError("cover chain did not assemble into a reduced word")
    roots_out = []
    numeric = []
    for i in range(1, n + 1):
        gamma = rs.act(tuple(reversed(gens[i:])), rs.basis_vec(gens[i - 1]))
        roots_out.append(gamma)
        c = rs.form_simple(gens[i - 1], chain[i])
        assert c == rs.form(gamma, chain[-1])
        numeric.append(c)
    assert rs.inversion_set(elem) == frozenset(rs.root_id(g) for g in roots_out)
    refl_product = IDENTITY
    for gamma in roots_out:
        refl_product = rs.multiply(refl_product, rs.reflection(rs.root_id(gamma)))
    assert refl_product == elem
    return ChainLabels(tuple(gens), tuple(roots_out), tuple(numeric), elem)
