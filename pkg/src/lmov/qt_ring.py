"""Exact arithmetic in q^{1/2}, t^{1/2}.

Internally x = q^{1/2} and y = t^{1/2}, so every exponent is a doubled
integer and the underlying polynomials live in Q[x, y] (python-flint
fmpq_mpoly) together with a monomial shift for negative powers.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

import flint

from .combinatorics import kappa, partitions_of, z_of

_CTX = flint.fmpq_mpoly_ctx.get(("x", "y"), "lex")
_X, _Y = _CTX.gens()
_ONE = _CTX.from_dict({(0, 0): 1})
_ZERO = _CTX.from_dict({})


class SymmetryError(ValueError):
    """Input is not invariant under q -> 1/q."""


class NotPolynomialError(ValueError):
    """A bracket denominator survives where a polynomial was required."""


def _fq(c):
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, flint.fmpz):
        return flint.fmpq(int(c))
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _frac(c):
    return Fraction(int(c.p), int(c.q))


def _monomial(a, b):
    return _CTX.from_dict({(a, b): 1})


class LaurentQT:
    """Laurent polynomial in q^{1/2}, t^{1/2} with rational coefficients.

    value = x^ex * y^ey * poly(x, y) with x = q^{1/2}, y = t^{1/2}.
    """

    __slots__ = ("poly", "ex", "ey")

    def __init__(self, poly=None, ex=0, ey=0):
        self.poly = _ZERO if poly is None else poly
        self.ex = ex
        self.ey = ey

    # construction ----------------------------------------------------------
    @classmethod
    def from_terms(cls, terms):
        """terms: {(2i, 2j): coefficient} meaning sum c q^i t^j."""
        terms = {k: v for k, v in terms.items() if v != 0}
        if not terms:
            return cls()
        mx = min(a for a, _ in terms)
        my = min(b for _, b in terms)
        d = {(a - mx, b - my): _fq(c) for (a, b), c in terms.items()}
        return cls(_CTX.from_dict(d), mx, my)

    @classmethod
    def const(cls, c):
        c = _fq(c)
        if c == 0:
            return cls()
        return cls(_CTX.from_dict({(0, 0): c}), 0, 0)

    @classmethod
    def monomial(cls, a2, b2, c=1):
        """c * q^{a2/2} t^{b2/2}."""
        return cls(_CTX.from_dict({(0, 0): _fq(c)}), a2, b2)

    @classmethod
    def coerce(cls, other):
        if isinstance(other, LaurentQT):
            return other
        return cls.const(other)

    # basic protocol --------------------------------------------------------
    def is_zero(self):
        return self.poly.is_zero()

    def _aligned(self, other):
        ex, ey = min(self.ex, other.ex), min(self.ey, other.ey)
        p1 = self.poly
        if self.ex != ex or self.ey != ey:
            p1 = p1 * _monomial(self.ex - ex, self.ey - ey)
        p2 = other.poly
        if other.ex != ex or other.ey != ey:
            p2 = p2 * _monomial(other.ex - ex, other.ey - ey)
        return p1, p2, ex, ey

    def __add__(self, other):
        if not isinstance(other, LaurentQT):
            if other == 0:
                return self
            other = LaurentQT.const(other)
        if other.poly.is_zero():
            return self
        if self.poly.is_zero():
            return other
        p1, p2, ex, ey = self._aligned(other)
        return LaurentQT(p1 + p2, ex, ey)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQT(-self.poly, self.ex, self.ey)

    def __sub__(self, other):
        return self + (-LaurentQT.coerce(other))

    def __rsub__(self, other):
        return LaurentQT.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, LaurentQT):
            return LaurentQT(self.poly * other.poly, self.ex + other.ex, self.ey + other.ey)
        c = _fq(other)
        if c == 0:
            return LaurentQT()
        return LaurentQT(self.poly * c, self.ex, self.ey)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentQT):
            raise TypeError("use RationalQT for division by Laurent polynomials")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        return LaurentQT(self.poly ** k, self.ex * k, self.ey * k)

    def __eq__(self, other):
        if not isinstance(other, LaurentQT):
            try:
                other = LaurentQT.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.terms().items())))

    def __repr__(self):
        return "LaurentQT(%s)" % self.pretty()

    # views -----------------------------------------------------------------
    def terms(self):
        """{(2i, 2j): Fraction} for sum c q^i t^j."""
        out = {}
        for (a, b), c in zip(self.poly.monoms(), self.poly.coeffs()):
            out[(a + self.ex, b + self.ey)] = _frac(c)
        return out

    def pretty(self):
        if self.is_zero():
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms().items()):
            mono = []
            if a:
                mono.append("q^(%s)" % _half(a))
            if b:
                mono.append("t^(%s)" % _half(b))
            parts.append("%s%s" % (c, "*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)

    def normalized(self):
        if self.is_zero():
            return LaurentQT()
        ms = self.poly.monoms()
        mx = min(m[0] for m in ms)
        my = min(m[1] for m in ms)
        if mx == 0 and my == 0:
            return self
        d = {(a - mx, b - my): c for (a, b), c in zip(ms, self.poly.coeffs())}
        return LaurentQT(_CTX.from_dict(d), self.ex + mx, self.ey + my)

    def exponent_range(self):
        """(min 2i, max 2i, min 2j, max 2j) over the support."""
        ks = list(self.terms())
        return (min(k[0] for k in ks), max(k[0] for k in ks),
                min(k[1] for k in ks), max(k[1] for k in ks))

    def q_only(self):
        return all(b == 0 for (_, b) in self.terms())

    def t_slices(self):
        """{2j: LaurentQT in q only} grouping by t-exponent."""
        groups = {}
        for (a, b), c in self.terms().items():
            groups.setdefault(b, {})[(a, 0)] = c
        return {b: LaurentQT.from_terms(d) for b, d in groups.items()}

    # substitutions ---------------------------------------------------------
    def subs_power(self, d):
        """q -> q^d, t -> t^d."""
        if d == 1:
            return self
        return LaurentQT(self.poly.inflate([d, d]), self.ex * d, self.ey * d)

    def invert_q(self):
        """q -> 1/q."""
        return LaurentQT.from_terms({(-a, b): c for (a, b), c in self.terms().items()})

    def invert_t(self):
        return LaurentQT.from_terms({(a, -b): c for (a, b), c in self.terms().items()})

    def specialize_t(self, N):
        """Substitute t = q^N."""
        out = {}
        for (a, b), c in self.terms().items():
            k = (a + N * b, 0)
            out[k] = out.get(k, 0) + c
        return LaurentQT.from_terms(out)

    def at_q1(self):
        """Set q = 1, keeping t."""
        out = {}
        for (a, b), c in self.terms().items():
            out[(0, b)] = out.get((0, b), 0) + c
        return LaurentQT.from_terms(out)

    def is_symmetric_q(self):
        return self == self.invert_q()

    # divisibility ----------------------------------------------------------
    def divide_bracket_sq(self, n):
        """Exact quotient by [n]^2, or None when [n]^2 does not divide."""
        if self.is_zero():
            return self
        den = (_ONE - _monomial(2 * n, 0)) ** 2
        quo, rem = divmod(self.poly, den)
        if not rem.is_zero():
            return None
        return LaurentQT(quo, self.ex + 2 * n, self.ey)

    def divide_q_poly(self, other):
        """Exact quotient by a q-only Laurent polynomial, or None."""
        other = other.normalized()
        quo, rem = divmod(self.poly, other.poly)
        if not rem.is_zero():
            return None
        return LaurentQT(quo, self.ex - other.ex, self.ey - other.ey)

    def order_at_q1(self):
        """Multiplicity of the factor (q - 1)."""
        if self.is_zero():
            raise ValueError("zero has infinite order")
        p = self.poly
        lin = _X - 1
        k = 0
        while True:
            quo, rem = divmod(p, lin)
            if not rem.is_zero():
                return k
            p = quo
            k += 1

    def content(self):
        """Gauss content: positive rational c with self/c having coprime integer coefficients."""
        if self.is_zero():
            raise ValueError("content of zero")
        cs = [_frac(c) for c in self.poly.coeffs()]
        num = reduce(gcd, (c.numerator for c in cs))
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in cs))
        return Fraction(abs(num), den)

    def evaluate(self, q, t):
        """Numeric evaluation; q, t may be floats or complex (sanity checks only)."""
        s = 0
        for (a, b), c in self.terms().items():
            s += float(c) * q ** (a / 2) * t ** (b / 2)
        return s

    # serialisation ---------------------------------------------------------
    def to_json(self):
        return [[int(a), int(b), str(c)] for (a, b), c in sorted(self.terms().items())]

    @classmethod
    def from_json(cls, data):
        return cls.from_terms({(int(a), int(b)): Fraction(c) for a, b, c in data})


def _half(k):
    return str(k // 2) if k % 2 == 0 else "%d/2" % k


Q_HALF = LaurentQT.monomial(1, 0)
T_HALF = LaurentQT.monomial(0, 1)
ONE = LaurentQT.const(1)
ZERO = LaurentQT()


def q_pow(a2):
    """q^{a2/2}."""
    return LaurentQT.monomial(a2, 0)


def t_pow(b2):
    return LaurentQT.monomial(0, b2)


@lru_cache(maxsize=None)
def bracket(n):
    """[n] = q^{-n/2} - q^{n/2}."""
    if n < 1:
        raise ValueError("bracket needs n >= 1")
    return LaurentQT.from_terms({(-n, 0): 1, (n, 0): -1})


@lru_cache(maxsize=None)
def bracket_t(n):
    """t^{-n/2} - t^{n/2}."""
    return LaurentQT.from_terms({(0, -n): 1, (0, n): -1})


def phi(vec):
    """phi_mu(q) = prod over all parts of [mu_j]; vec is a colour vector."""
    out = ONE
    for lam in vec:
        for p in lam:
            out = out * bracket(p)
    return out


def phi_partition(lam):
    return phi((lam,))


def M_matrix(A, B):
    """M_AB(q) = sum_mu chi_A(mu) chi_B(mu) / z_mu * prod [mu_j]."""
    from .symfun import character
    if sum(A) != sum(B):
        raise ValueError("M_AB needs |A| = |B|")
    out = ZERO
    for mu in partitions_of(sum(A)):
        c = Fraction(character(A, mu) * character(B, mu), z_of(mu))
        if c:
            out = out + phi_partition(mu) * c
    return out


def M_color(Avec, Bvec):
    out = ONE
    for A, B in zip(Avec, Bvec):
        out = out * M_matrix(A, B)
    return out


# ---------------------------------------------------------------------------

class RationalQT:
    """Laurent polynomial divided by a product of squared brackets.

    den is a Counter {n: k} standing for prod_n [n]^{2k}.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        if num is None:
            num = ZERO
        elif not isinstance(num, LaurentQT):
            num = LaurentQT.const(num)
        self.num = num
        self.den = Counter({n: k for n, k in (den or {}).items() if k > 0})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalQT):
            return x
        return cls(LaurentQT.coerce(x))

    def is_zero(self):
        return self.num.is_zero()

    def _lift(self, den):
        """Rewrite over a larger denominator den (must contain self.den)."""
        num = self.num
        for n, k in den.items():
            extra = k - self.den.get(n, 0)
            if extra < 0:
                raise ValueError("denominator does not contain self.den")
            if extra:
                num = num * _bracket_sq_pow(n, extra)
        return num

    def __add__(self, other):
        if not isinstance(other, RationalQT):
            if isinstance(other, (int, Fraction)) and other == 0:
                return self
            other = RationalQT.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalQT(self.num + other.num, self.den)
        den = self.den | other.den
        return RationalQT(self._lift(den) + other._lift(den), den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQT(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalQT.coerce(other))

    def __rsub__(self, other):
        return RationalQT.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalQT):
            return RationalQT(self.num * other.num, self.den + other.den)
        if isinstance(other, LaurentQT):
            return RationalQT(self.num * other, self.den)
        return RationalQT(self.num * other, self.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalQT(self.num * (Fraction(1) / Fraction(other)), self.den)
        raise TypeError("RationalQT only divides by scalars; use div_bracket")

    def __pow__(self, k):
        out = RationalQT(ONE)
        for _ in range(k):
            out = out * self
        return out

    def div_bracket(self, n, k=1):
        """Divide by [n]^k (k may be odd)."""
        num = self.num
        den = Counter(self.den)
        full, odd = divmod(k, 2)
        den[n] += full
        if odd:
            num = num * bracket(n)
            den[n] += 1
        return RationalQT(num, den)

    def div_phi(self, vec):
        out = self
        for lam in vec:
            for p in lam:
                out = out.div_bracket(p)
        return out

    def mul_bracket_sq(self, n):
        den = Counter(self.den)
        if den.get(n, 0) > 0:
            den[n] -= 1
            return RationalQT(self.num, den)
        return RationalQT(self.num * _bracket_sq_pow(n, 1), den)

    def __eq__(self, other):
        if not isinstance(other, RationalQT):
            try:
                other = RationalQT.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        den = self.den | other.den
        return self._lift(den) == other._lift(den)

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, tuple(sorted(r.den.items()))))

    def __repr__(self):
        if not self.den:
            return "RationalQT(%s)" % self.num.pretty()
        d = "*".join("[%d]^%d" % (n, 2 * k) for n, k in sorted(self.den.items()))
        return "RationalQT((%s) / %s)" % (self.num.pretty(), d)

    def reduced(self):
        """Cancel bracket factors that divide the numerator."""
        num = self.num
        den = Counter(self.den)
        if num.is_zero():
            return RationalQT()
        for n in sorted(den):
            while den[n] > 0:
                quo = num.divide_bracket_sq(n)
                if quo is None:
                    break
                num = quo
                den[n] -= 1
        return RationalQT(num, den)

    def is_polynomial(self):
        return not self.reduced().den

    def to_laurent(self):
        r = self.reduced()
        if r.den:
            raise NotPolynomialError("denominator %s survives" % dict(r.den))
        return r.num

    def subs_power(self, d):
        """q -> q^d, t -> t^d."""
        if d == 1:
            return self
        return RationalQT(self.num.subs_power(d), Counter({n * d: k for n, k in self.den.items()}))

    def invert_q(self):
        # [n]^2 is invariant under q -> 1/q
        return RationalQT(self.num.invert_q(), self.den)

    def specialize_t(self, N):
        return RationalQT(self.num.specialize_t(N), self.den)

    def is_symmetric_q(self):
        return self.num.is_symmetric_q()

    def denominator_poly(self):
        out = ONE
        for n, k in self.den.items():
            out = out * _bracket_sq_pow(n, k)
        return out

    def evaluate(self, q, t):
        return self.num.evaluate(q, t) / self.denominator_poly().evaluate(q, t)

    def to_json(self):
        return {"num": self.num.to_json(), "den": sorted([int(n), int(k)] for n, k in self.den.items())}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentQT.from_json(data["num"]), Counter({int(n): int(k) for n, k in data["den"]}))


@lru_cache(maxsize=None)
def _bracket_sq_pow(n, k):
    return bracket(n) ** (2 * k)


def rational(x):
    return RationalQT.coerce(x)


def pole_order_q1(f):
    """Order of vanishing at q = 1 (negative for a pole)."""
    f = RationalQT.coerce(f)
    if f.is_zero():
        raise ValueError("pole order of zero")
    return f.num.order_at_q1() - 2 * sum(f.den.values())


# ----- v-polynomials --------------------------------------------------------

class VPolynomial:
    """Element of Q[v, t^{+-1/2}], v = (q^{-1/2} - q^{1/2})^2; keys (v_deg, 2j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: Fraction(c) for k, c in (coeffs or {}).items() if c != 0}

    def __eq__(self, other):
        return isinstance(other, VPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return "VPolynomial(%r)" % (self.coeffs,)

    def degree_v(self):
        return max((g for g, _ in self.coeffs), default=-1)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def to_laurent(self):
        out = ZERO
        for (g, b), c in self.coeffs.items():
            out = out + v_power(g) * t_pow(b) * c
        return out

    def to_json(self):
        return [[int(g), int(b), str(c)] for (g, b), c in sorted(self.coeffs.items())]


@lru_cache(maxsize=None)
def v_power(k):
    return bracket(1) ** (2 * k)


@lru_cache(maxsize=None)
def _v_power_terms(k):
    return v_power(k).terms()


def to_v(f):
    """Rewrite a q <-> 1/q symmetric element as a polynomial in v and t^{1/2}."""
    if isinstance(f, RationalQT):
        f = f.to_laurent()
    f = LaurentQT.coerce(f)
    if not f.is_symmetric_q():
        raise SymmetryError("input is not symmetric under q -> 1/q")
    out = {}
    for b, g in f.t_slices().items():
        rem = dict((a, c) for (a, _), c in g.terms().items())
        if any(a % 2 for a in rem):
            raise NotPolynomialError("half-integer power of q cannot be written in v")
        while rem:
            top = max(rem)
            c = rem[top]
            k = top // 2
            if k < 0:
                raise NotPolynomialError("negative v-degree")
            out[(k, b)] = c
            for (a, _), cc in _v_power_terms(k).items():
                val = rem.get(a, 0) - c * cc
                if val:
                    rem[a] = val
                else:
                    rem.pop(a, None)
    return VPolynomial(out)


# ----- p-adic valuation -----------------------------------------------------

def ord_p_rational(x, p):
    x = Fraction(x)
    if x == 0:
        raise ValueError("Ord_p of zero")
    k = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        k += 1
    while d % p == 0:
        d //= p
        k -= 1
    return k


def ord_p(x, p):
    """Valuation of the scalar content; accepts scalars, LaurentQT, RationalQT,
    or an iterable of those (a Schur-indexed family sharing one scalar)."""
    if isinstance(x, (int, Fraction)):
        return ord_p_rational(x, p)
    return ord_p_rational(content(x), p)


def content(x):
    """Gauss content across the full monomial and Schur support.

    Bracket denominators are primitive, so the content of f/b(v) is the
    content of f once everything sits over a common denominator.
    """
    if isinstance(x, LaurentQT):
        return x.content()
    if isinstance(x, RationalQT):
        return x.num.content()
    items = [RationalQT.coerce(v) for v in (x.values() if isinstance(x, dict) else x)]
    items = [v for v in items if not v.is_zero()]
    if not items:
        raise ValueError("content of zero")
    den = Counter()
    for v in items:
        den |= v.den
    cs = [v._lift(den).content() for v in items]
    num = reduce(gcd, (c.numerator for c in cs))
    dd = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in cs))
    return Fraction(num, dd)


# ----- univariate rational functions ----------------------------------------

class RatFunc:
    """Element of Q(z) as a reduced fraction of fmpq_poly with monic denominator."""

    __slots__ = ("n", "d")

    def __init__(self, n, d=None, _reduced=False):
        if not isinstance(n, flint.fmpq_poly):
            n = flint.fmpq_poly([_fq(n)])
        if d is None:
            d = flint.fmpq_poly([1])
        elif not isinstance(d, flint.fmpq_poly):
            d = flint.fmpq_poly([_fq(d)])
        if not _reduced:
            if n.is_zero():
                d = flint.fmpq_poly([1])
            else:
                g = n.gcd(d)
                if g.degree() > 0:
                    n = n // g
                    d = d // g
                lc = d.leading_coefficient()
                if lc != 1:
                    n = n / lc
                    d = d / lc
        self.n = n
        self.d = d

    @classmethod
    def gen(cls):
        return cls(flint.fmpq_poly([0, 1]), _reduced=True)

    @classmethod
    def monomial(cls, k, c=1):
        """c * z^k for any integer k."""
        if k >= 0:
            return cls(flint.fmpq_poly([0] * k + [_fq(c)]), _reduced=True)
        return cls(flint.fmpq_poly([_fq(c)]), flint.fmpq_poly([0] * (-k) + [1]), _reduced=True)

    def is_zero(self):
        return self.n.is_zero()

    def __add__(self, o):
        if not isinstance(o, RatFunc):
            o = RatFunc(o)
        if self.d == o.d:
            return RatFunc(self.n + o.n, self.d)
        return RatFunc(self.n * o.d + o.n * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.n, self.d, _reduced=True)

    def __sub__(self, o):
        if not isinstance(o, RatFunc):
            o = RatFunc(o)
        return self + (-o)

    def __rsub__(self, o):
        return RatFunc(o) - self

    def __mul__(self, o):
        if not isinstance(o, RatFunc):
            c = _fq(o)
            if c == 0:
                return RatFunc(0)
            return RatFunc(self.n * c, self.d, _reduced=True)
        if self.n.is_zero() or o.n.is_zero():
            return RatFunc(0)
        return RatFunc(self.n * o.n, self.d * o.d)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, RatFunc):
            o = RatFunc(o)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.n * o.d, self.d * o.n)

    def __rtruediv__(self, o):
        return RatFunc(o) / self

    def __pow__(self, k):
        if k >= 0:
            return RatFunc(self.n ** k, self.d ** k, _reduced=True)
        return RatFunc(1) / (self ** (-k))

    def __eq__(self, o):
        if not isinstance(o, RatFunc):
            o = RatFunc(o)
        return self.n == o.n and self.d == o.d

    def __hash__(self):
        return hash((str(self.n), str(self.d)))

    def __repr__(self):
        return "RatFunc((%s)/(%s))" % (self.n, self.d)

    def is_laurent(self):
        """True when the denominator is a monomial."""
        d = self.d
        return d.degree() == 0 or all(c == 0 for c in list(d.coeffs())[:-1])

    def laurent_terms(self):
        """{exponent: Fraction} when self is a Laurent polynomial."""
        if not self.is_laurent():
            raise NotPolynomialError("not a Laurent polynomial")
        shift = self.d.degree()
        return {k - shift: _frac(c) for k, c in enumerate(self.n.coeffs()) if c != 0}

    def subs_inverse_square(self):
        """z -> z^{-2}; used to pass from the Hecke parameter to q^{1/2}."""
        dn, dd = self.n.degree(), self.d.degree()
        D = max(dn, dd, 0)
        n = _reverse_inflate(self.n, D)
        d = _reverse_inflate(self.d, D)
        return RatFunc(n, d)

    def evaluate(self, z):
        return _eval(self.n, z) / _eval(self.d, z)


def _reverse_inflate(p, D):
    # z^{2D} p(z^{-2})
    cs = list(p.coeffs())
    out = [0] * (2 * D + 1)
    for k, c in enumerate(cs):
        out[2 * D - 2 * k] = c
    return flint.fmpq_poly(out)


def _eval(p, z):
    s = 0
    for c in reversed(list(p.coeffs())):
        s = s * z + _frac(c)
    return s


def leading_q1(f):
    """(order, c(t)) with f ~ c(t) (1 - q^{1/2})^order as q -> 1.

    [n] = x^{-n}(1 - x)(1 + x + ... + x^{2n-1}) with x = q^{1/2}, so each
    bracket behaves like 2n (1 - x) near x = 1.
    """
    f = RationalQT.coerce(f)
    if f.is_zero():
        raise ValueError("leading term of zero")
    p = f.num.poly
    lin = _ONE - _X
    k = 0
    while True:
        quo, rem = divmod(p, lin)
        if not rem.is_zero():
            break
        p = quo
        k += 1
    scale = Fraction(1)
    for n, e in f.den.items():
        scale *= Fraction(1, (2 * n) ** (2 * e))
    return k - 2 * sum(f.den.values()), LaurentQT(p, f.num.ex, f.num.ey).at_q1() * scale


def value_at_q1(f):
    """Value of f at q = 1 as a LaurentQT in t; raises if f has a pole there."""
    order, c = leading_q1(f)
    if order < 0:
        raise NotPolynomialError("pole at q = 1")
    return c if order == 0 else ZERO
