"""Iwahori-Hecke algebra H_n: seminormal representations and idempotents.

We use generators T_i with (T_i - Q)(T_i + 1) = 0 where Q = q^{-1}.  In
terms of the normalised braiding g_i on V (eigenvalues q^{-1/2} and
-q^{1/2}) this is T_i = q^{-1/2} g_i, so the row (symmetric) direction
carries the eigenvalue Q.

Irreducible modules S_lam are realised in Young's seminormal basis,
indexed by standard tableaux; coefficients are RatFunc values in Q.
"""

from functools import lru_cache

from .qt_ring import RatFunc, NotPolynomialError

Qg = RatFunc.gen()
ONE_R = RatFunc(1)


class ConsistencyError(RuntimeError):
    """A runtime self-check of an algebraic identity failed."""


class ProjectionCapError(ValueError):
    """Requested projection exceeds the configured size cap."""


@lru_cache(maxsize=None)
def _Qpow(k):
    return RatFunc.monomial(k)


# ----- tableaux -------------------------------------------------------------

@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """Standard tableaux of shape lam as tuples of cells (row, col), entry k at index k-1."""
    lam = tuple(lam)
    n = sum(lam)
    out = []

    def rec(filled, cells):
        if len(cells) == n:
            out.append(tuple(cells))
            return
        for r in range(len(lam)):
            c = filled[r]
            if c < lam[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                cells.append((r, c))
                rec(filled, cells)
                cells.pop()
                filled[r] -= 1

    rec([0] * len(lam), [])
    return tuple(out)


def row_reading_tableau(lam):
    return tuple((r, c) for r in range(len(lam)) for c in range(lam[r]))


def tableau_contents(tab):
    return tuple(c - r for r, c in tab)


def addable_contents(shape):
    """Contents of the cells that can be added to the diagram `shape`."""
    shape = list(shape)
    out = []
    for r in range(len(shape) + 1):
        c = shape[r] if r < len(shape) else 0
        if r == 0 or shape[r - 1] > c:
            out.append(c - r)
    return out


def shape_of_cells(cells):
    rows = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    return tuple(rows[r] for r in sorted(rows))


# ----- seminormal representation -------------------------------------------

@lru_cache(maxsize=None)
def _coeffs(r):
    # diagonal a(r) and the off-diagonal factor for the lower-to-upper move
    Qr = _Qpow(r)
    a = (Qg - 1) * Qr / (Qr - 1)
    beta = Qg * (_Qpow(r + 1) - 1) * (_Qpow(r - 1) - 1) / ((Qr - 1) * (Qr - 1))
    return a, beta


class SeminormalRep:
    """The irreducible H_n-module S_lam in the seminormal basis."""

    def __init__(self, lam):
        self.lam = tuple(lam)
        self.n = sum(self.lam)
        self.tableaux = standard_tableaux(self.lam)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        self.dim = len(self.tableaux)
        self._gen = {}

    def generator(self, i, inverse=False):
        """Action table for T_i (or T_i^{-1}): list of (diag, partner, off) per basis index."""
        key = (i, inverse)
        if key in self._gen:
            return self._gen[key]
        table = []
        for tab in self.tableaux:
            (r1, c1), (r2, c2) = tab[i - 1], tab[i]
            if r1 == r2:
                diag, partner, off = Qg, None, None
            elif c1 == c2:
                diag, partner, off = RatFunc(-1), None, None
            else:
                r = (c2 - r2) - (c1 - r1)
                a, beta = _coeffs(r)
                swapped = list(tab)
                swapped[i - 1], swapped[i] = tab[i], tab[i - 1]
                partner = self.index[tuple(swapped)]
                diag = a
                # r < 0: i+1 sits in a lower row; the partner is the more dominant tableau
                off = ONE_R if r < 0 else beta
            if inverse:
                diag = (diag - (Qg - 1)) / Qg
                off = None if off is None else off / Qg
            table.append((diag, partner, off))
        self._gen[key] = table
        return table

    def apply(self, vec, letter):
        """Apply T_{|letter|}^{sign} to a sparse vector {index: RatFunc}."""
        table = self.generator(abs(letter), letter < 0)
        out = {}
        for k, c in vec.items():
            diag, partner, off = table[k]
            v = c * diag
            out[k] = out[k] + v if k in out else v
            if partner is not None:
                w = c * off
                out[partner] = out[partner] + w if partner in out else w
        return {k: c for k, c in out.items() if not c.is_zero()}

    def apply_word(self, vec, word):
        """Apply T_{w_1}...T_{w_m} (rightmost first)."""
        for x in reversed(word):
            vec = self.apply(vec, x)
        return vec

    def matrix(self, word):
        cols = []
        for k in range(self.dim):
            cols.append(self.apply_word({k: ONE_R}, word))
        return [[cols[j].get(i, RatFunc(0)) for j in range(self.dim)] for i in range(self.dim)]

    # Jucys-Murphy elements inside a block of consecutive strands ------------
    def jm(self, vec, start, k):
        """L_k of the copy of H_d generated by T_start, ..., acting on vec."""
        if k == 1:
            return vec
        g = start + k - 2
        v = self.apply(vec, g)
        v = self.jm(v, start, k - 1)
        v = self.apply(v, g)
        inv = ONE_R / Qg
        return {i: c * inv for i, c in v.items()}

    def block_idempotent(self, vec, start, tab):
        """Apply the primitive idempotent E_tab of the block copy of H_d at `start`."""
        cont = tableau_contents(tab)
        for k in range(2, len(tab) + 1):
            target = cont[k - 1]
            shape = shape_of_cells(tab[:k - 1])
            for c in addable_contents(shape):
                if c == target:
                    continue
                lv = self.jm(vec, start, k)
                denom = _Qpow(target) - _Qpow(c)
                Qc = _Qpow(c)
                out = {}
                for i in set(lv) | set(vec):
                    x = lv.get(i, RatFunc(0)) - vec.get(i, RatFunc(0)) * Qc
                    if not x.is_zero():
                        out[i] = x / denom
                vec = out
                if not vec:
                    return vec
        return vec


@lru_cache(maxsize=None)
def seminormal(lam):
    return SeminormalRep(lam)


def front_compatible(rep, tab):
    """Basis indices whose first len(tab) entries occupy exactly the cells of tab."""
    d = len(tab)
    return [k for k, t in enumerate(rep.tableaux) if t[:d] == tab]


def contains(lam, mu):
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


# ----- Hecke elements in the T_w basis --------------------------------------

def _reduced_word(perm):
    """A reduced word (1-based generator indices) with T_perm = T_{i1} ... T_{ik}."""
    p = list(perm)
    word = []
    # bubble sort from the right: perm = s_{i1}...s_{ik}
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return tuple(reversed(word))


class HeckeElement:
    """Finite combination sum c_w T_w in H_n with RatFunc coefficients in x = q^{1/2}.

    A permutation w is stored in one-line notation as a tuple of images of
    0..n-1.  Multiplication uses T_w T_s = T_{ws} if l(ws) > l(w) and
    (Q - 1) T_w + Q T_{ws} otherwise, with Q = x^{-2}.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def identity(cls, n):
        return cls(n, {tuple(range(n)): RatFunc(1)})

    @classmethod
    def generator(cls, n, i):
        w = list(range(n))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(n, {tuple(w): RatFunc(1)})

    def __repr__(self):
        return "HeckeElement(%d, %d terms)" % (self.n, len(self.terms))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(RatFunc(-1))

    def scale(self, c):
        if not isinstance(c, RatFunc):
            c = RatFunc(c)
        return HeckeElement(self.n, {w: v * c for w, v in self.terms.items()})

    def _times_generator(self, i):
        Q = _x_Q()
        out = {}
        for w, c in self.terms.items():
            ws = list(w)
            ws[i - 1], ws[i] = ws[i], ws[i - 1]
            ws = tuple(ws)
            if w[i - 1] < w[i]:
                out[ws] = out[ws] + c if ws in out else c
            else:
                a = c * (Q - 1)
                b = c * Q
                out[w] = out[w] + a if w in out else a
                out[ws] = out[ws] + b if ws in out else b
        return HeckeElement(self.n, out)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        total = HeckeElement(self.n)
        for w, c in other.terms.items():
            part = self
            for i in _reduced_word(w):
                part = part._times_generator(i)
            total = total + part.scale(c)
        return total

    def __eq__(self, other):
        d = self - other
        return not d.terms

    def coefficient(self, w):
        return self.terms.get(tuple(w), RatFunc(0))


@lru_cache(maxsize=None)
def _x_Q():
    return RatFunc.monomial(-2)


def jucys_murphy(n, k):
    """L_1 = 1, L_{k+1} = Q^{-1} T_k L_k T_k as HeckeElements."""
    L = HeckeElement.identity(n)
    Qinv = RatFunc.monomial(2)
    for j in range(1, k):
        T = HeckeElement.generator(n, j)
        L = (T * L * T).scale(Qinv)
    return L


def minimal_projection(A, cap=4):
    """Primitive idempotent of H_{|A|} attached to the row-reading tableau of A.

    Built from Jucys-Murphy eigen-projections; E^2 = E is checked before
    returning.
    """
    A = tuple(A)
    n = sum(A)
    if n > cap:
        raise ProjectionCapError("|A| = %d exceeds projection cap %d" % (n, cap))
    if n == 0:
        return HeckeElement.identity(0)
    tab = row_reading_tableau(A)
    cont = tableau_contents(tab)
    E = HeckeElement.identity(n)
    for k in range(2, n + 1):
        L = jucys_murphy(n, k)
        shape = shape_of_cells(tab[:k - 1])
        target = RatFunc.monomial(-2 * cont[k - 1])
        for c in addable_contents(shape):
            if c == cont[k - 1]:
                continue
            Qc = RatFunc.monomial(-2 * c)
            factor = (L - HeckeElement.identity(n).scale(Qc)).scale(ONE_R / (target - Qc))
            E = E * factor
    if not E * E == E:
        raise ConsistencyError("minimal projection for %r is not idempotent" % (A,))
    return E


def laurent_or_raise(f):
    if not f.is_laurent():
        raise NotPolynomialError("expected a Laurent polynomial, got %r" % (f,))
    return f.laurent_terms()
