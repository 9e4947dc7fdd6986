"""Symmetric functions in the power-sum and Schur bases.

Keys of a SymFun are colour vectors (tuples of partitions), one partition
per alphabet; a single alphabet uses 1-tuples.  Coefficients may be exact
rationals or RationalQT values.
"""

import threading
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (compositions_weak, conjugate, partition, partitions_of,
                            scale, union, z_of)
from .qt_ring import ONE, LaurentQT, RationalQT, bracket_t, q_pow

_lock = threading.Lock()


# ----- characters -----------------------------------------------------------

def _beta(lam, ell):
    return tuple(lam[i] + ell - 1 - i if i < len(lam) else ell - 1 - i for i in range(ell))


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = mu[1:]
    ell = len(lam)
    beta = _beta(lam, ell)
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        sign = -1 if sum(1 for c in beta if nb < c < b) % 2 else 1
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = partition(newbeta[i] - (ell - 1 - i) for i in range(ell))
        total += sign * _mn(newlam, rest)
    return total


def character(A, mu):
    """chi_A evaluated on the conjugacy class of cycle type mu."""
    A, mu = tuple(A), tuple(mu)
    if sum(A) != sum(mu):
        raise ValueError("character needs |A| = |mu|, got %r, %r" % (A, mu))
    with _lock:
        return _mn(A, mu)


def color_character(Avec, muvec):
    out = 1
    for A, mu in zip(Avec, muvec):
        out *= character(A, mu)
    return out


class CharacterTable:
    """Character table of S_n as a dict (A, mu) -> int."""

    def __init__(self, n):
        self.n = n
        self.parts = partitions_of(n)
        self.entries = {(A, mu): character(A, mu) for A in self.parts for mu in self.parts}

    def __getitem__(self, key):
        return self.entries[key]

    def orthogonality_defect(self):
        """Largest |sum_mu chi_A chi_B / z_mu - delta_AB| (zero when orthogonal)."""
        worst = Fraction(0)
        for A in self.parts:
            for B in self.parts:
                s = sum(Fraction(self.entries[(A, mu)] * self.entries[(B, mu)], z_of(mu))
                        for mu in self.parts)
                worst = max(worst, abs(s - (1 if A == B else 0)))
        return worst


# ----- SymFun ---------------------------------------------------------------

def _is_zero(c):
    if isinstance(c, (RationalQT, LaurentQT)):
        return c.is_zero()
    return c == 0


def _as_key(k):
    # a bare partition becomes a 1-tuple colour vector
    if len(k) == 0 or isinstance(k[0], int):
        return (tuple(k),)
    return tuple(tuple(a) for a in k)


class SymFun:
    """Finitely supported combination of p_mu or s_A over one or more alphabets."""

    __slots__ = ("basis", "terms", "alphabet")

    def __init__(self, basis, terms=None, alphabet="x"):
        if basis not in ("p", "s"):
            raise ValueError("basis must be 'p' or 's'")
        self.basis = basis
        self.alphabet = alphabet
        clean = {}
        for k, c in (terms or {}).items():
            k = _as_key(k)
            if not _is_zero(c):
                clean[k] = c
        self.terms = clean

    @classmethod
    def p(cls, *mus, coeff=1):
        return cls("p", {_as_key(mus if len(mus) != 1 else mus[0]): coeff})

    @classmethod
    def s(cls, *lams, coeff=1):
        return cls("s", {_as_key(lams if len(lams) != 1 else lams[0]): coeff})

    def __repr__(self):
        return "SymFun(%s, %r)" % (self.basis, self.terms)

    def coeff(self, key):
        return self.terms.get(_as_key(key), 0)

    def copy_with(self, terms):
        return SymFun(self.basis, terms, self.alphabet)

    def __add__(self, other):
        if other == 0:
            return self
        other = other.in_basis(self.basis)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return self.copy_with(out)

    __radd__ = __add__

    def __neg__(self):
        return self.copy_with({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self.copy_with({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFun):
            return self.scale(other)
        a = self.to_power()
        b = other.to_power()
        out = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                k = tuple(union(x, y) for x, y in zip(k1, k2))
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return SymFun("p", out, self.alphabet)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            if other == 0:
                return not self.terms
            return NotImplemented
        a = self.to_power()
        b = other.to_power()
        keys = set(a.terms) | set(b.terms)
        for k in keys:
            d = a.terms.get(k, 0) - b.terms.get(k, 0)
            if not _is_zero(d):
                return False
        return True

    def in_basis(self, basis):
        return self.to_power() if basis == "p" else self.to_schur()

    def to_power(self):
        if self.basis == "p":
            return self
        out = {}
        for key, c in self.terms.items():
            for pk, pc in _schur_key_to_power(key).items():
                v = c * pc
                out[pk] = out[pk] + v if pk in out else v
        return SymFun("p", out, self.alphabet)

    def to_schur(self):
        if self.basis == "s":
            return self
        out = {}
        for key, c in self.terms.items():
            for sk, sc in _power_key_to_schur(key).items():
                v = c * sc
                out[sk] = out[sk] + v if sk in out else v
        return SymFun("s", out, self.alphabet)

    def map_coefficients(self, f):
        return self.copy_with({k: f(c) for k, c in self.terms.items()})

    def is_integral_schur(self):
        """Membership in Omega: all Schur coefficients are integers."""
        for c in self.to_schur().terms.values():
            if isinstance(c, (RationalQT, LaurentQT)):
                return False
            if Fraction(c).denominator != 1:
                return False
        return True

    def to_json(self):
        out = []
        for k, c in sorted(self.terms.items()):
            if isinstance(c, (RationalQT, LaurentQT)):
                cj = c.to_json()
            else:
                cj = str(Fraction(c))
            out.append([[list(a) for a in k], cj])
        return {"basis": "power" if self.basis == "p" else "schur", "terms": out}


@lru_cache(maxsize=None)
def _schur_to_power_single(A):
    n = sum(A)
    return {mu: Fraction(character(A, mu), z_of(mu)) for mu in partitions_of(n)
            if character(A, mu)}


@lru_cache(maxsize=None)
def _power_to_schur_single(mu):
    n = sum(mu)
    return {A: character(A, mu) for A in partitions_of(n) if character(A, mu)}


def _product_expansion(key, single):
    out = {(): Fraction(1)}
    for part in key:
        nxt = {}
        for k, c in out.items():
            for kk, cc in single(part).items():
                nxt[k + (kk,)] = c * cc
        out = nxt
    return out


@lru_cache(maxsize=None)
def _schur_key_to_power(key):
    return _product_expansion(key, _schur_to_power_single)


@lru_cache(maxsize=None)
def _power_key_to_schur(key):
    return _product_expansion(key, _power_to_schur_single)


def schur_to_power(A):
    """s_A = sum_mu chi_A(mu)/z_mu p_mu."""
    return SymFun("s", {_as_key(A): 1}).to_power()


def power_to_schur(mu):
    """p_mu = sum_A chi_A(mu) s_A."""
    return SymFun("p", {_as_key(mu): 1}).to_schur()


def plethystic_power(f, d, coefficients=False):
    """p_n -> p_{nd}; with coefficients=True also q -> q^d, t -> t^d."""
    g = f.to_power()
    out = {}
    for k, c in g.terms.items():
        nk = tuple(scale(a, d) for a in k)
        if coefficients and isinstance(c, (RationalQT, LaurentQT)):
            c = c.subs_power(d)
        out[nk] = out[nk] + c if nk in out else c
    return SymFun("p", out, f.alphabet)


# ----- quantum dimensions ---------------------------------------------------

@lru_cache(maxsize=None)
def quantum_dimension(A):
    """dim_q V_A as a RationalQT, from the character expansion."""
    A = tuple(A)
    out = RationalQT()
    for mu in partitions_of(sum(A)):
        chi = character(A, mu)
        if not chi:
            continue
        term = RationalQT(ONE * Fraction(chi, z_of(mu)))
        for m in mu:
            term = RationalQT(term.num * bracket_t(m), term.den).div_bracket(m)
        out = out + term
    return out.reduced()


def hooks(A):
    conj = conjugate(A)
    return [A[i] - j + conj[j] - i - 1 for i in range(len(A)) for j in range(A[i])]


def contents(A):
    return [j - i for i in range(len(A)) for j in range(A[i])]


@lru_cache(maxsize=None)
def quantum_dimension_hook(A):
    """Hook-content form prod (t^{-1/2}q^{-c/2} - t^{1/2}q^{c/2}) / prod [h]."""
    num = ONE
    for c in contents(A):
        num = num * (LaurentQT.from_terms({(-c, -1): 1, (c, 1): -1}))
    out = RationalQT(num)
    for h in hooks(A):
        out = out.div_bracket(h)
    return out


def quantum_dimension_at(A, N):
    """dim_q V_A at t = q^N as a LaurentQT in q^{1/2}."""
    return quantum_dimension(A).specialize_t(N).to_laurent()


@lru_cache(maxsize=None)
def _kostka(A, b):
    if not b:
        return 1 if not A else 0
    last = b[-1]
    total = 0
    for mu in _horizontal_strip_removals(A, last):
        total += _kostka(mu, b[:-1])
    return total


def _horizontal_strip_removals(A, k):
    # all mu inside A with A/mu a horizontal strip of size k
    out = []
    A = list(A)
    n = len(A)

    def rec(i, left, cur):
        if i == n:
            if left == 0:
                out.append(partition(cur))
            return
        lo = A[i + 1] if i + 1 < n else 0
        for take in range(0, min(left, A[i] - lo) + 1):
            rec(i + 1, left - take, cur + [A[i] - take])

    rec(0, k, [])
    return out


def kostka(A, b):
    """Number of semistandard tableaux of shape A and content b."""
    A, b = tuple(A), tuple(b)
    if sum(A) != sum(b):
        raise ValueError("kostka needs |A| = sum(b)")
    return _kostka(A, b)


def principal_specialization(A, N):
    """s_A(q^{(N-1)/2}, ..., q^{-(N-1)/2}) via Kostka numbers."""
    out = LaurentQT()
    for b in compositions_weak(sum(A), N):
        k = kostka(A, b)
        if k:
            e = -sum((N + 1 - 2 * j) * bj for j, bj in enumerate(b, start=1))
            out = out + q_pow(e) * k
    return out


def schur_color(Avec):
    return SymFun("s", {_as_key(Avec): 1})


def p_color(muvec):
    return SymFun("p", {_as_key(muvec): 1})

