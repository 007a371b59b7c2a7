"""Positive roots, group elements in normal form, and inversion sets.

The root table is populated breadth-first by depth: the simple roots sit at
depth 1 and a frontier root beta expands through every generator s with
B(alpha_s, beta) < 0, which is exactly the condition under which the depth
of s(beta) is depth(beta) + 1.  Deduplication is by exact coordinate
vector, so the table is complete for every generated depth.  Negative roots
are never stored; signed queries work on raw coordinate vectors.

Group elements are kept in a canonical normal form: the lexicographically
least reduced word, computed by greedily removing the smallest left descent
(s is a left descent of x iff x^-1(alpha_s) is a negative root).  Two
elements are equal iff their canonical words are equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .system import CoxeterSystem, preset as _preset


@dataclass(frozen=True)
class Element:
    """Group element as its lexicographically least reduced word (0-based)."""

    word: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self):
        return (len(self.word), self.word)

    def __str__(self):
        return " ".join(str(s + 1) for s in self.word) if self.word else "e"

    def __repr__(self):
        return f"Element({self})"


IDENTITY = Element(())


@dataclass(frozen=True)
class Root:
    id: int
    coords: tuple  # AlgebraicScalar vector over the simple roots
    depth: int
    witness_word: tuple  # root = witness_word(alpha_{witness_gen})
    witness_gen: int


class NotARootError(ValueError):
    pass


class RootSystem:
    """Computational context: a Coxeter system plus its growing root table.

    All caches are monotone (they only gain entries) and every public value
    is immutable, so a RootSystem may be shared freely by readers while a
    single writer extends it.
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.field = system.field
        self.rank = system.rank
        self.gram = system.gram
        self._zero = self.field.zero
        self._basis = tuple(
            tuple(self.field.one if i == s else self._zero for i in range(self.rank))
            for s in range(self.rank)
        )
        self.roots: list[Root] = []
        self._index: dict = {}
        self._levels: list[list[int]] = []
        self._exhausted = False
        seed = []
        for s in range(self.rank):
            rid = self._register(self._basis[s], 1, (), s)
            seed.append(rid)
        self._levels.append(seed)
        # monotone caches shared by the higher layers
        self.dominance_cache: dict[int, int] = {}
        self.reflection_cache: dict[int, Element] = {}
        self.reflection_inv_cache: dict[int, frozenset] = {}
        self.small_sets: dict[int, object] = {}
        self.automata: dict[int, object] = {}
        self.plane_cache: dict = {}
        self.join_cache: dict = {}

    @classmethod
    def preset(cls, name: str) -> "RootSystem":
        return cls(_preset(name))

    # ------------------------------------------------------------------
    # vectors

    def basis_vec(self, s: int) -> tuple:
        return self._basis[s]

    def coord_key(self, vec) -> tuple:
        return tuple(x.coeffs for x in vec)

    def form(self, u, v):
        """The bilinear form B(u, v)."""
        acc = self._zero
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            row = self.gram[i]
            inner = self._zero
            for j, vj in enumerate(v):
                if not vj.is_zero():
                    inner = inner + row[j] * vj
            acc = acc + ui * inner
        return acc

    def form_simple(self, s: int, vec):
        """B(alpha_s, vec), one Gram row."""
        row = self.gram[s]
        acc = self._zero
        for j, vj in enumerate(vec):
            if not vj.is_zero():
                acc = acc + row[j] * vj
        return acc

    def simple_reflect(self, s: int, vec) -> tuple:
        b = self.form_simple(s, vec)
        if b.is_zero():
            return vec
        out = list(vec)
        out[s] = out[s] - (b + b)
        return tuple(out)

    def reflect_by_root(self, root_vec, vec) -> tuple:
        """Reflection in an arbitrary unit root, v - 2 B(r, v) r."""
        b = self.form(root_vec, vec)
        if b.is_zero():
            return vec
        twice = b + b
        return tuple(v - twice * r for v, r in zip(vec, root_vec))

    def act(self, word, vec) -> tuple:
        """Apply the element with the given word: w(v) = s_1(s_2(...(v)))."""
        for s in reversed(word):
            vec = self.simple_reflect(s, vec)
        return vec

    def act_inverse(self, word, vec) -> tuple:
        for s in word:
            vec = self.simple_reflect(s, vec)
        return vec

    def vec_sign(self, vec) -> int:
        """+1 for a positive root vector, -1 for negative; mixed signs raise."""
        has_pos = has_neg = False
        for x in vec:
            s = x.sign()
            if s > 0:
                has_pos = True
            elif s < 0:
                has_neg = True
        if has_pos and has_neg:
            raise NotARootError("vector has mixed coordinate signs")
        if not has_pos and not has_neg:
            raise NotARootError("zero vector is not a root")
        return 1 if has_pos else -1

    # ------------------------------------------------------------------
    # root table

    def _register(self, vec, depth, witness_word, witness_gen) -> int:
        rid = len(self.roots)
        self.roots.append(Root(rid, vec, depth, witness_word, witness_gen))
        self._index[self.coord_key(vec)] = rid
        return rid

    @property
    def generated_depth(self) -> int:
        return len(self._levels)

    def ensure_depth(self, depth: int) -> None:
        while self.generated_depth < depth and not self._exhausted:
            new = []
            for rid in self._levels[-1]:
                beta = self.roots[rid]
                for s in range(self.rank):
                    if self.form_simple(s, beta.coords).sign() < 0:
                        child = self.simple_reflect(s, beta.coords)
                        key = self.coord_key(child)
                        if key not in self._index:
                            cid = self._register(
                                child, beta.depth + 1, (s,) + beta.witness_word, beta.witness_gen
                            )
                            new.append(cid)
            if new:
                self._levels.append(new)
            else:
                self._exhausted = True

    def roots_to_depth(self, depth: int) -> list[Root]:
        self.ensure_depth(depth)
        return [r for r in self.roots if r.depth <= depth]

    def descend_to_simple(self, vec):
        """Witness pair (word, gen) with vec = word(alpha_gen), by depth descent."""
        steps = []
        v = vec
        for _ in range(100000):
            for t in range(self.rank):
                if v == self._basis[t]:
                    return tuple(steps), t
            chosen = None
            for s in range(self.rank):
                if self.form_simple(s, v).sign() > 0:
                    chosen = s
                    break
            if chosen is None:
                raise NotARootError("vector admits no depth descent; not a positive root")
            steps.append(chosen)
            v = self.simple_reflect(chosen, v)
        raise NotARootError("descent did not terminate; not a root")

    def root_id(self, vec) -> int:
        """Table id of a positive root vector, extending the table on demand."""
        key = self.coord_key(vec)
        hit = self._index.get(key)
        if hit is not None:
            return hit
        word, _gen = self.descend_to_simple(vec)
        self.ensure_depth(len(word) + 1)
        hit = self._index.get(key)
        if hit is None:
            raise NotARootError("vector is not a root of this system")
        return hit

    def signed_root_id(self, vec):
        """(sign, id) for a root vector of either sign."""
        sgn = self.vec_sign(vec)
        if sgn < 0:
            vec = tuple(-x for x in vec)
        return sgn, self.root_id(vec)

    def root_depth_of_vec(self, vec) -> int:
        key = self.coord_key(vec)
        hit = self._index.get(key)
        if hit is not None:
            return self.roots[hit].depth
        word, _ = self.descend_to_simple(vec)
        return len(word) + 1

    # ------------------------------------------------------------------
    # elements

    def word_length(self, word) -> int:
        """Coxeter length of the element spelled by an arbitrary word.

        Count the prefix roots w_{<i}(alpha_{s_i}) that land negative; each
        negative cancels one earlier letter, so the length is len - 2*neg.
        """
        neg = 0
        for i, s in enumerate(word):
            vec = self._basis[s]
            for a in reversed(word[:i]):
                vec = self.simple_reflect(a, vec)
            if self.vec_sign(vec) < 0:
                neg += 1
        return len(word) - 2 * neg

    def left_descents(self, x: Element) -> list[int]:
        out = []
        for s in range(self.rank):
            vec = self._basis[s]
            for a in x.word:
                vec = self.simple_reflect(a, vec)
            if self.vec_sign(vec) < 0:
                out.append(s)
        return out

    def right_descents(self, x: Element) -> list[int]:
        out = []
        for s in range(self.rank):
            if self.vec_sign(self.act(x.word, self._basis[s])) < 0:
                out.append(s)
        return out

    def normalize(self, word) -> Element:
        """Canonical lex-least reduced word for the element spelled by word."""
        rem = list(word)
        out = []
        while rem:
            found = None
            for s in range(self.rank):
                vec = self._basis[s]
                for a in rem:
                    vec = self.simple_reflect(a, vec)
                if self.vec_sign(vec) < 0:
                    found = s
                    break
            if found is None:
                break
            out.append(found)
            if rem[0] == found:
                rem.pop(0)
            else:
                rem.insert(0, found)
        return Element(tuple(out))

    def element(self, word) -> Element:
        return self.normalize(tuple(word))

    def element_from_str(self, text: str) -> Element:
        """Parse a space-separated 1-based word such as ``3 1 2 1`` or ``e``."""
        text = text.strip()
        if text in ("", "e"):
            return IDENTITY
        letters = []
        for tok in text.split():
            i = int(tok)
            if not 1 <= i <= self.rank:
                raise ValueError(f"generator {i} out of range 1..{self.rank}")
            letters.append(i - 1)
        return self.normalize(tuple(letters))

    def multiply(self, u: Element, v: Element) -> Element:
        return self.normalize(u.word + v.word)

    def inverse(self, u: Element) -> Element:
        return self.normalize(tuple(reversed(u.word)))

    def act_element(self, u: Element, vec) -> tuple:
        return self.act(u.word, vec)

    def left_quotient(self, s: int, x: Element) -> Element:
        """s * x for a left descent s of x (drops one letter)."""
        if x.word and x.word[0] == s:
            return Element(x.word[1:])
        return self.normalize((s,) + x.word)

    # ------------------------------------------------------------------
    # inversion sets and their bases

    def inversion_vectors(self, word) -> list[tuple]:
        """Prefix roots of a reduced word, in word order."""
        out = []
        for i, s in enumerate(word):
            vec = self._basis[s]
            for a in reversed(word[:i]):
                vec = self.simple_reflect(a, vec)
            out.append(vec)
        return out

    def inversion_set(self, x: Element) -> frozenset:
        return frozenset(self.root_id(v) for v in self.inversion_vectors(x.word))

    def reflection(self, rid: int) -> Element:
        """The reflection in the given positive root, as a normal-form element."""
        cached = self.reflection_cache.get(rid)
        if cached is None:
            r = self.roots[rid]
            w = r.witness_word
            cached = self.normalize(w + (r.witness_gen,) + tuple(reversed(w)))
            self.reflection_cache[rid] = cached
        return cached

    def reflection_inversions(self, rid: int) -> frozenset:
        cached = self.reflection_inv_cache.get(rid)
        if cached is None:
            cached = self.inversion_set(self.reflection(rid))
            self.reflection_inv_cache[rid] = cached
        return cached

    def inversion_base(self, x: Element) -> frozenset:
        """Roots spanning the extreme rays of the inversion cone: the beta in
        N(x) with length(s_beta * x) = length(x) - 1."""
        target = len(x.word) - 1
        out = set()
        for rid in self.inversion_set(x):
            refl = self.reflection(rid)
            if self.word_length(refl.word + x.word) == target:
                out.add(rid)
        return frozenset(out)

    def suffixes(self, x: Element) -> set:
        """All suffixes of x (v such that x = uv reduced), including e and x."""
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for s in self.left_descents(y):
                z = self.left_quotient(s, y)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return seen

    # ------------------------------------------------------------------
    # display helpers

    def coords_str(self, vec) -> str:
        return ",".join(x.exact_str() for x in vec)

    def coords_decimal(self, vec, digits: int = 12) -> str:
        return ",".join(x.decimal_str(digits) for x in vec)


def parse_root(rs: RootSystem, text: str) -> tuple:
    """Root vector from ``coords:c1,c2,...`` or a ``word+gen`` pair.

    ``word+gen`` uses 1-based indices: ``1 2+3`` is the image of the third
    simple root under the element 1 2; a bare ``+3`` is the simple root.
    """
    from .scalar import parse_scalar

    text = text.strip()
    if text.startswith("coords:"):
        parts = text[len("coords:"):].split(",")
        if len(parts) != rs.rank:
            raise ValueError(f"expected {rs.rank} coordinates")
        return tuple(parse_scalar(rs.field, p) for p in parts)
    if "+" in text:
        head, _, tail = text.rpartition("+")
        gen = int(tail)
        if not 1 <= gen <= rs.rank:
            raise ValueError(f"generator {gen} out of range")
        elem = rs.element_from_str(head) if head.strip() else IDENTITY
        return rs.act_element(elem, rs.basis_vec(gen - 1))
    raise ValueError(f"cannot parse root {text!r}; use coords:... or word+gen")
