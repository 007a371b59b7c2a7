"""Exact arithmetic in the real cyclotomic field Q(2*cos(pi/N)).

Every Gram matrix entry -cos(pi/m) attached to a finite Coxeter label m,
and hence every root coordinate produced by iterated reflections, lives in
the single totally real field Q(theta), theta = 2*cos(pi/N), where N is the
least common multiple of the finite labels.  A scalar is stored as its
coordinate vector in the power basis 1, theta, ..., theta^(d-1), reduced
eagerly modulo the minimal polynomial of theta.  Equality is therefore
coefficient-wise, and the sign of a nonzero scalar is decided exactly by
rational interval arithmetic over an isolating interval for theta, bisecting
until the evaluated interval excludes zero.

No decision anywhere in the package is ever made on floating point values;
floats appear only in display helpers.
"""

from __future__ import annotations

import math
from functools import lru_cache

try:  # gmpy2's mpq is a drop-in, much faster rational type
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

Q0 = QQ(0)
Q1 = QQ(1)


# ---------------------------------------------------------------------------
# Dense univariate polynomials over QQ, little-endian coefficient tuples.

def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _ptrim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [Q0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _ptrim(out)


def _pdivmod(p, q):
    """Exact division with remainder; q must be nonzero."""
    q = _ptrim(q)
    rem = list(_ptrim(p))
    quo = [Q0] * max(0, len(rem) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) - 1 >= dq and rem:
        k = len(rem) - 1 - dq
        c = rem[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
    return _ptrim(quo), _ptrim(rem)


def _peval(p, x):
    acc = Q0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pdiff(p):
    return _ptrim([QQ(i) * p[i] for i in range(1, len(p))])


@lru_cache(maxsize=None)
def _cyclotomic(n: int):
    """Integer coefficients of the n-th cyclotomic polynomial (as QQ tuple)."""
    if n == 1:
        return (QQ(-1), Q1)
    p = tuple(QQ(c) for c in [-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, rem = _pdivmod(p, _cyclotomic(d))
            assert rem == ()
    return p


def _theta_minpoly(n: int):
    """Monic minimal polynomial of theta = 2*cos(pi/n) over Q.

    For n >= 2 the cyclotomic polynomial C_{2n}(x) is palindromic of even
    degree 2d and factors as x^d * psi(x + 1/x); psi is the wanted minimal
    polynomial, of degree d = phi(2n)/2.  The fold uses the basis
    T_k(y) = x^k + x^(-k) with T_0 = 2, T_1 = y, T_{k+1} = y*T_k - T_{k-1}.
    """
    if n == 1:
        return (QQ(2), Q1)  # theta = -2
    cyc = _cyclotomic(2 * n)
    deg = len(cyc) - 1
    assert deg % 2 == 0
    d = deg // 2
    t_prev, t_cur = (QQ(2),), (Q0, Q1)  # T_0, T_1
    psi = (cyc[d],)
    for k in range(1, d + 1):
        psi = _padd(psi, _pmul((cyc[d + k],), t_cur))
        t_prev, t_cur = t_cur, _padd(_pmul((Q0, Q1), t_cur), _pneg(t_prev))
    assert len(psi) == d + 1 and psi[-1] == 1
    return psi


# ---------------------------------------------------------------------------
# Sturm sequences, used once per field to certify the isolating interval.

def _sturm_chain(p):
    chain = [p, _pdiff(p)]
    while len(chain[-1]) > 1:
        _, rem = _pdivmod(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(_pneg(rem))
    return [c for c in chain if c]


def _variations(chain, x):
    signs = []
    for p in chain:
        v = _peval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


# ---------------------------------------------------------------------------
# Rational interval arithmetic (closed intervals).

def _iv_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _iv_eval(coeffs, iv):
    acc = (coeffs[-1], coeffs[-1])
    for c in reversed(coeffs[:-1]):
        lo, hi = _iv_mul(acc, iv)
        acc = (lo + c, hi + c)
    return acc


class FieldSpec:
    """The field Q(theta), theta = 2*cos(pi/n), with decidable signs.

    The value of theta is pinned down by the pair (minpoly, isolating
    interval).  The interval only ever shrinks; refinements are cached so
    repeated sign queries get cheaper over time.  All other state is
    immutable after construction.
    """

    def __init__(self, n: int):
        self.n = n
        self.minpoly = _theta_minpoly(n)
        self.degree = len(self.minpoly) - 1
        self._theta_float = 2.0 * math.cos(math.pi / n)
        if self.degree == 1:
            self._rational_theta = -self.minpoly[0]
            self._lo = self._rational_theta - 1
            self._hi = self._rational_theta + 1
        else:
            self._rational_theta = None
            self._isolate()
        self._powers = self._reduction_table()
        self._zero = AlgebraicScalar(self, (Q0,) * self.degree)
        self._one = AlgebraicScalar(self, (Q1,) + (Q0,) * (self.degree - 1))

    # -- construction helpers

    def _isolate(self):
        chain = _sturm_chain(self.minpoly)
        seed = QQ(self._theta_float)  # exact binary rational of the float seed
        lo, hi = seed - QQ(1, 256), seed + QQ(1, 256)
        # theta is the largest real root of its minimal polynomial, so keep
        # the rightmost root of the seed interval.
        while _count_roots(chain, lo, hi) != 1:
            mid = (lo + hi) / 2
            if _count_roots(chain, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        assert _peval(self.minpoly, lo) * _peval(self.minpoly, hi) < 0
        self._lo, self._hi = lo, hi

    def _reduction_table(self):
        """theta^k for k = d .. 2d-2 in the power basis."""
        d = self.degree
        table = {}
        cur = [-c for c in self.minpoly[:d]]  # theta^d = -(lower part of minpoly)
        for k in range(d, 2 * d - 1):
            table[k] = tuple(cur)
            top = cur[d - 1]
            nxt = [Q0] + cur[:-1]  # multiply by theta, then fold theta^d back
            if top != 0:
                for i in range(d):
                    nxt[i] += top * table[d][i]
            cur = nxt
        return table

    # -- interval refinement (monotone cache; the value theta never moves)

    def refine_interval(self):
        mid = (self._lo + self._hi) / 2
        # mid is rational and minpoly is irreducible of degree >= 2, so
        # minpoly(mid) != 0 and the sign change locates theta.
        if _peval(self.minpoly, self._lo) * _peval(self.minpoly, mid) < 0:
            self._hi = mid
        else:
            self._lo = mid
        return self._lo, self._hi

    @property
    def isolating_interval(self):
        return (self._lo, self._hi)

    # -- scalar constructors

    @property
    def zero(self) -> "AlgebraicScalar":
        return self._zero

    @property
    def one(self) -> "AlgebraicScalar":
        return self._one

    @property
    def theta(self) -> "AlgebraicScalar":
        if self.degree == 1:
            return self.scalar([self._rational_theta])
        return self.scalar([Q0, Q1] + [Q0] * (self.degree - 2))

    def scalar(self, coeffs) -> "AlgebraicScalar":
        coeffs = [QQ(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than field degree")
        coeffs += [Q0] * (self.degree - len(coeffs))
        return AlgebraicScalar(self, tuple(coeffs))

    def rational(self, value) -> "AlgebraicScalar":
        return self.scalar([QQ(value)])

    def cos_value(self, m: int) -> "AlgebraicScalar":
        """cos(pi/m) as a field element, for a finite label m dividing n.

        Uses 2*cos(k*pi/n) = p_k(theta) with p_0 = 2, p_1 = theta and
        p_{k+1} = theta*p_k - p_{k-1}; the result is p_{n/m} / 2.
        """
        if m < 2:
            raise ValueError("labels below 2 carry no cosine")
        if self.n % m != 0:
            raise ValueError(f"label {m} does not divide the field order {self.n}")
        k = self.n // m
        p_prev, p_cur = self.rational(2), self.theta
        if k == 0:
            raise ValueError("label exceeds the field order")
        for _ in range(k - 1):
            p_prev, p_cur = p_cur, p_cur * self.theta - p_prev
        return p_cur / 2

    # -- sign machinery

    def sign_of(self, coeffs) -> int:
        if all(c == 0 for c in coeffs):
            return 0
        if self.degree == 1:
            return 1 if coeffs[0] > 0 else -1
        nonzero = [c for c in coeffs[1:] if c != 0]
        if not nonzero:
            return 1 if coeffs[0] > 0 else -1
        for _ in range(20000):
            lo, hi = _iv_eval(coeffs, (self._lo, self._hi))
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.refine_interval()
        raise AssertionError("sign determination failed to converge")

    def float_value(self, coeffs) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * self._theta_float + float(c)
        return acc

    # -- identification

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.n == other.n

    def __hash__(self):
        return hash(("FieldSpec", self.n))

    def __repr__(self):
        return f"FieldSpec(n={self.n}, degree={self.degree})"


def make_field(labels) -> FieldSpec:
    """Field spanned by cos(pi/m) for every finite label m in ``labels``.

    An empty collection is treated as {2} (all cosines rational).
    """
    finite = sorted({int(m) for m in labels if m and int(m) >= 2})
    if not finite:
        finite = [2]
    return FieldSpec(math.lcm(*finite))


class AlgebraicScalar:
    """Element of a FieldSpec in reduced power-basis coordinates.

    Immutable; arithmetic returns fresh scalars.  Mixed operands may be
    Python ints or rationals, which are coerced into the field.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- coercion

    def _coerce(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other
        return self.field.rational(other)

    # -- ring operations

    def __add__(self, other):
        o = self._coerce(other)
        return AlgebraicScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return AlgebraicScalar(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return AlgebraicScalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        d = self.field.degree
        if d == 1:
            return AlgebraicScalar(self.field, (self.coeffs[0] * o.coeffs[0],))
        conv = [Q0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b != 0:
                    conv[i + j] += a * b
        out = conv[:d]
        powers = self.field._powers
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c != 0:
                pw = powers[k]
                for i in range(d):
                    out[i] += c * pw[i]
        return AlgebraicScalar(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicScalar":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self.field.degree == 1:
            return AlgebraicScalar(self.field, (Q1 / self.coeffs[0],))
        a, b = _ptrim(self.coeffs), self.field.minpoly
        # invariants: a = u*self + (...)*minpoly, b = v*self + (...)*minpoly
        u, v = (Q1,), ()
        while b:
            q, r = _pdivmod(a, b)
            a, b = b, r
            u, v = v, _padd(u, _pneg(_pmul(q, v)))
        assert len(a) == 1  # minpoly irreducible, so the gcd is a unit
        inv = _pmul(u, (Q1 / a[0],))
        _, rem = _pdivmod(inv, self.field.minpoly)
        return self.field.scalar(list(rem))

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates and comparisons

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def sign(self) -> int:
        return self.field.sign_of(self.coeffs)

    def compare(self, other) -> int:
        return (self - other).sign()

    def cmp_to_one(self) -> int:
        return self.compare(1)

    def cmp_to_minus_one(self) -> int:
        return self.compare(-1)

    def __eq__(self, other):
        if isinstance(other, AlgebraicScalar):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, type(Q1))):
            return self.coeffs == self._coerce(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # -- display

    def __float__(self):
        return self.field.float_value(self.coeffs)

    def exact_str(self) -> str:
        """Compact power-basis form, e.g. ``1/2``, ``t``, ``1/2+3/2t^2``."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            var = "t" if i == 1 else f"t^{i}"
            s = ("-" if c < 0 else ("+" if terms else "")) + mag + var
            terms.append(s)
        return "".join(terms) if terms else "0"

    def decimal_str(self, digits: int = 12) -> str:
        return f"{float(self):.{digits}f}"

    def __repr__(self):
        return self.exact_str()


def parse_scalar(field: FieldSpec, text: str) -> AlgebraicScalar:
    """Parse rationals and t/theta polynomials like ``3/2``, ``1+2t``, ``t^2-1``."""
    s = text.strip().replace(" ", "").replace("theta", "t")
    if not s:
        raise ValueError("empty scalar")
    import re

    token = re.compile(r"([+-]?[^+-]+)")
    coeffs = [Q0] * field.degree
    pos = 0
    for part in token.findall(s):
        pos += len(part)
        m = re.fullmatch(r"([+-]?)(\d+(?:/\d+)?)?(?:\*?t(?:\^(\d+))?)?", part)
        if not m or (m.group(2) is None and "t" not in part):
            raise ValueError(f"cannot parse scalar term {part!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = QQ(m.group(2)) if m.group(2) else Q1
        power = 0
        if "t" in part:
            power = int(m.group(3)) if m.group(3) else 1
        if power >= field.degree:
            raise ValueError(f"power t^{power} outside field of degree {field.degree}")
        coeffs[power] += sign * coef
    if pos != len(s):
        raise ValueError(f"trailing junk in scalar {text!r}")
    return field.scalar(coeffs)
