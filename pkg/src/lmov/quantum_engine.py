"""Coloured quantum invariants W_A(L; q, t) of closed braids.

Crossing convention: a positive braid letter +i carries the inverse
braiding R^{-1} on slots (i, i+1), a negative letter carries R.  With this
choice the framing correction q^{d(L)} with

    d(L) = -1/2 sum_a w(K_a) (L_a, L_a + 2rho) + 1/N sum_{a<b} lk(K_a, K_b) |A^a| |A^b|

removes every fractional power of q exactly, the full twist acts on the
image of S_A by q^{kappa_A / 2}, and fundamental colours give
t^{lk} dim_q V P_L.  The integer part of q^{d(L)} is
q^{-sum kappa w / 2} t^{-sum |A| w / 2}.

Two independent evaluation paths are provided:

* the production path works at generic N through Schur-Weyl duality: the
  cabled braid acts on seminormal Hecke modules S_lam, projections are
  Jucys-Murphy idempotents on each component block, and the quantum trace
  is sum_lam chi_lam(...) dim_q V_lam with t kept symbolic;
* the explicit-N path applies the R-matrix of U_q(sl_N) to basis tensors
  and takes the quantum trace with K_{2 rho}; interpolation over N
  reconstructs the t-dependence and serves as a cross-check.
"""

import threading
from collections import Counter
from fractions import Fraction
from itertools import product

from . import hecke
from .braid_link import cable, sublink_component_map
from .combinatorics import (color_degrees, color_is_zero, colors_of_degrees, kappa,
                            partitions_of, z_of)
from .hecke import (ConsistencyError, RatFunc, front_compatible, minimal_projection,
                    row_reading_tableau, seminormal)
from .qt_ring import LaurentQT, NotPolynomialError, RationalQT
from .symfun import character, contents, hooks

CONVENTION_VERSION = "mirror-R-1"
DEFAULT_MAX_STRANDS = 12


class ConventionError(RuntimeError):
    """Fractional powers of q failed to cancel."""


class ResourceError(ValueError):
    """A configured cap would be exceeded."""


class ResolutionError(RuntimeError):
    """Interpolation in N did not converge within its sample budget."""


class InvariantValue:
    """A computed invariant together with how it was obtained."""

    __slots__ = ("color", "value", "provenance")

    def __init__(self, color, value, provenance):
        self.color = color
        self.value = value
        self.provenance = provenance

    def __repr__(self):
        return "InvariantValue(%r, %r, %r)" % (self.color, self.value, self.provenance)

    def to_json(self):
        return {"color": [list(a) for a in self.color], "value": self.value.to_json(),
                "provenance": self.provenance}


def _normalize_color(link, Avec):
    Avec = tuple(tuple(int(p) for p in a) for a in Avec)
    if len(Avec) != link.num_components:
        raise ValueError("colour has %d entries, link has %d components"
                         % (len(Avec), link.num_components))
    for a in Avec:
        if any(a[i] < a[i + 1] for i in range(len(a) - 1)) or any(p <= 0 for p in a):
            raise ValueError("not a partition: %r" % (a,))
    return Avec


def framing_monomial(link, Avec):
    """q^{-sum kappa w/2} t^{-sum |A| w/2} as doubled exponents (a2, b2)."""
    a2 = -sum(kappa(A) * w for A, w in zip(Avec, link.writhes))
    b2 = -sum(sum(A) * w for A, w in zip(Avec, link.writhes))
    return a2, b2


def reduce_to_sublink(link, Avec):
    """Drop components coloured by the empty partition."""
    keep = [a for a, A in enumerate(Avec) if A]
    if len(keep) == link.num_components:
        return link, Avec
    sub, mapping = sublink_component_map(link, keep)
    new = [None] * sub.num_components
    for old, nw in mapping.items():
        new[nw] = Avec[old]
    return sub, tuple(new)


# ----- generic-N engine -----------------------------------------------------

_cache = {}
_cache_lock = threading.Lock()
_disk_cache = None


def set_disk_cache(cache):
    """Install an object with get(key) / put(key, RationalQT) used as a second-level cache."""
    global _disk_cache
    _disk_cache = cache


def clear_cache():
    with _cache_lock:
        _cache.clear()


def colored_invariant(link, Avec, max_strands=DEFAULT_MAX_STRANDS):
    """W_A(L; q, t) as a reduced RationalQT."""
    Avec = _normalize_color(link, Avec)
    if color_is_zero(Avec):
        return RationalQT(1)
    link, Avec = reduce_to_sublink(link, Avec)
    key = (link.strands, tuple(link.word), Avec)
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    disk_key = None
    if _disk_cache is not None:
        disk_key = ("W", link.content_hash(), Avec, CONVENTION_VERSION)
        hit = _disk_cache.get(disk_key)
        if hit is not None:
            with _cache_lock:
                _cache[key] = hit
            return hit
    value = _hecke_invariant(link, Avec, max_strands)
    with _cache_lock:
        _cache[key] = value
    if _disk_cache is not None:
        _disk_cache.put(disk_key, value)
    return value


def invariant(link, Avec, max_strands=DEFAULT_MAX_STRANDS):
    Avec = _normalize_color(link, Avec)
    return InvariantValue(Avec, colored_invariant(link, Avec, max_strands), "hecke-generic-N")


def hecke_characters(link, Avec):
    """chi_lam of (mirrored cabled braid word) * (block idempotents) for each lam.

    Returned values are RatFunc in the Hecke parameter Q = q^{-1}.
    """
    d = color_degrees(Avec)
    cabled, starts = cable(link, d)
    n = cabled.strands
    # positive letter -> g^{-1} = q^{-1/2} T^{-1}
    tword = tuple(-x for x in cabled.word)
    blocks = []
    for a, A in enumerate(Avec):
        first = link.strands_of(a)[0]
        blocks.append((starts[first], row_reading_tableau(A)))
    front_start, front_tab = blocks[0]
    assert front_start == 1
    others = blocks[1:]
    chis = {}
    for lam in partitions_of(n):
        if not hecke.contains(lam, Avec[0]):
            continue
        rep = seminormal(lam)
        total = RatFunc(0)
        for k in front_compatible(rep, front_tab):
            v = {k: RatFunc(1)}
            for start, tab in others:
                if len(tab) > 1:
                    v = rep.block_idempotent(v, start, tab)
                if not v:
                    break
            if not v:
                continue
            v = rep.apply_word(v, tword)
            c = v.get(k)
            if c is not None:
                total = total + c
        if not total.is_zero():
            chis[lam] = total
    return chis, cabled


def _bracket_x(h):
    # [h] = x^{-h} - x^{h}
    return RatFunc.monomial(-h) - RatFunc.monomial(h)


def _dim_slices(lam):
    """dim_q V_lam as {2j: RatFunc in x} (t-exponent slices)."""
    num = LaurentQT.const(1)
    for c in contents(lam):
        num = num * LaurentQT.from_terms({(-c, -1): 1, (c, 1): -1})
    den = RatFunc(1)
    for h in hooks(lam):
        den = den * _bracket_x(h)
    out = {}
    for (a, b), coef in num.terms().items():
        out[b] = out.get(b, RatFunc(0)) + RatFunc.monomial(a, coef)
    return {b: f / den for b, f in out.items()}


_dim_cache = {}


def _dims(lam):
    if lam not in _dim_cache:
        _dim_cache[lam] = _dim_slices(lam)
    return _dim_cache[lam]


def hook_denominator(Avec):
    """Counter {h: k}: prod over components and hooks of [h]^2."""
    den = Counter()
    for A in Avec:
        for h in hooks(A):
            den[h] += 1
    return den


def _hecke_invariant(link, Avec, max_strands):
    n = sum(len(link.strands_of(a)) * d for a, d in enumerate(color_degrees(Avec)))
    if n > max_strands:
        raise ResourceError("cabled braid would have %d strands (cap %d)" % (n, max_strands))
    chis, cabled = hecke_characters(link, Avec)
    writhe_c = cabled.braid.writhe()
    den = hook_denominator(Avec)
    bpoly = RatFunc(1)
    for h, k in den.items():
        bpoly = bpoly * _bracket_x(h) ** (2 * k)
    acc = {}
    for lam, chi in chis.items():
        r = chi.subs_inverse_square() * bpoly
        for b, f in _dims(lam).items():
            acc[b] = acc.get(b, RatFunc(0)) + r * f
    a_fr, b_fr = framing_monomial(link, Avec)
    terms = {}
    for b, f in acc.items():
        if f.is_zero():
            continue
        if not f.is_laurent():
            raise NotPolynomialError("W * hook denominator is not Laurent at t^%d/2" % b)
        for a, c in f.laurent_terms().items():
            # x^{-writhe_c} from g^{-1} = x^{-1} T^{-1}
            key = (a - writhe_c + a_fr, b + b_fr)
            terms[key] = terms.get(key, 0) + c
    return RationalQT(LaurentQT.from_terms(terms), den).reduced()


# ----- explicit-N R-matrix path --------------------------------------------

class TensorState:
    """Vector in V^{tensor n} at rank N: {basis tuple: RatFunc in x = q^{1/2}} times s^s_exp,
    where s = q^{1/(2N)}."""

    __slots__ = ("coeffs", "N", "s_exp")

    def __init__(self, coeffs, N, s_exp=0):
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}
        self.N = N
        self.s_exp = s_exp

    @classmethod
    def basis(cls, idx, N):
        return cls({tuple(idx): RatFunc(1)}, N)

    def __add__(self, other):
        if self.s_exp != other.s_exp and self.coeffs and other.coeffs:
            raise ConventionError("adding states with different s-powers")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        s = self.s_exp if self.coeffs else other.s_exp
        return TensorState(out, self.N, s)

    def scale(self, c):
        return TensorState({k: v * c for k, v in self.coeffs.items()}, self.N, self.s_exp)

    def __eq__(self, other):
        a = {k: c for k, c in self.coeffs.items()}
        b = {k: c for k, c in other.coeffs.items()}
        if not a and not b:
            return True
        return self.s_exp == other.s_exp and a == b


_XI = RatFunc.monomial(-1)      # q^{-1/2}
_XD = RatFunc.monomial(-1) - RatFunc.monomial(1)   # q^{-1/2} - q^{1/2}


def apply_braiding(state, i, sign, N=None):
    """Apply R (sign = +1) or R^{-1} (sign = -1) of U_q(sl_N) on slots (i, i+1), 1-based.

    q^{-1/(2N)} R acts on X_a (x) X_b by q^{-1/2} X_a X_a when a = b, by the
    swap when a < b, and by the swap plus (q^{-1/2} - q^{1/2}) X_a X_b when
    a > b.  The scalar q^{1/(2N)} is tracked in state.s_exp.
    """
    out = {}
    p = i - 1

    def add(k, c):
        out[k] = out[k] + c if k in out else c

    for key, c in state.coeffs.items():
        a, b = key[p], key[p + 1]
        sw = key[:p] + (b, a) + key[p + 2:]
        if sign > 0:
            if a == b:
                add(key, c * _XI)
            elif a < b:
                add(sw, c)
            else:
                add(sw, c)
                add(key, c * _XD)
        else:
            if a == b:
                add(key, c * RatFunc.monomial(1))
            elif a < b:
                add(sw, c)
                add(key, -(c * _XD))
            else:
                add(sw, c)
    return TensorState(out, state.N, state.s_exp + (1 if sign > 0 else -1))


def crossing(state, letter):
    """Operator attached to a braid letter: R^{-1} for +i, R for -i."""
    return apply_braiding(state, abs(letter), -1 if letter > 0 else 1)


def k2rho_weight(idx, N):
    """Exponent of x = q^{1/2} picked up by K_{2rho} on X_{i1} (x) ... (x) X_{in}."""
    return -sum(N + 1 - 2 * i for i in idx)


def apply_K2rho_all(state, N=None):
    N = state.N if N is None else N
    out = {k: c * RatFunc.monomial(k2rho_weight(k, N)) for k, c in state.coeffs.items()}
    return TensorState(out, state.N, state.s_exp)


def quantum_trace(endo, n, N):
    """tr(endo o K_{2rho}) over V^{tensor n}; returns (RatFunc in x, s exponent)."""
    total = RatFunc(0)
    s_exp = None
    for idx in product(range(1, N + 1), repeat=n):
        st = endo(TensorState.basis(idx, N))
        c = st.coeffs.get(idx)
        if c is None:
            continue
        if s_exp is None:
            s_exp = st.s_exp
        elif s_exp != st.s_exp:
            raise ConventionError("inconsistent s-powers inside one trace")
        total = total + c * RatFunc.monomial(k2rho_weight(idx, N))
    return total, (s_exp or 0)


def apply_hecke(state, elem, offset=1):
    """Act by a HeckeElement of H_d on slots offset .. offset+d-1 (T_i = q^{-1/2} g_i)."""
    total = TensorState({}, state.N, state.s_exp)
    for w, c in elem.terms.items():
        st = state
        for i in reversed(hecke._reduced_word(w)):
            st = apply_braiding(st, offset + i - 1, 1)
            st = TensorState({k: v * _XI for k, v in st.coeffs.items()}, st.N, st.s_exp - 1)
        total = total + st.scale(c)
    return total


def full_twist_eigenvalue(A, N):
    """Scalar c with delta^n S_A = c S_A on V^{tensor n}, delta = sigma_1 ... sigma_{n-1}.

    Returns a RatFunc in x = q^{1/2} after removing the s-power carried by
    the U(1) part, or raises ConsistencyError if no such scalar exists.
    """
    A = tuple(A)
    n = sum(A)
    E = minimal_projection(A)
    word = tuple(range(1, n)) * n
    scalar = None
    for idx in product(range(1, N + 1), repeat=n):
        base = apply_hecke(TensorState.basis(idx, N), E)
        if not base.coeffs:
            continue
        st = base
        for x in reversed(word):
            st = crossing(st, x)
        # the U(1) part of the full twist on n fundamental strands is s^{-n(n-1)}
        st = TensorState(st.coeffs, N, st.s_exp + n * (n - 1))
        if st.s_exp != 0:
            raise ConventionError("unexpected s-power in full twist")
        for k, v in base.coeffs.items():
            ratio = st.coeffs.get(k, RatFunc(0)) / v
            if scalar is None:
                scalar = ratio
            elif ratio != scalar:
                raise ConsistencyError("full twist is not scalar on S_%r" % (A,))
        if TensorState(st.coeffs, N) != base.scale(scalar):
            raise ConsistencyError("full twist is not scalar on S_%r" % (A,))
    return scalar


def full_twist_eigen_check(A, N):
    """delta^n S_A = q^{kappa_A / 2} S_A at rank N."""
    if sum(A) <= 1:
        return True
    return full_twist_eigenvalue(A, N) == RatFunc.monomial(kappa(tuple(A)))


def invariant_at_N(link, Avec, N, max_strands=8):
    """W_A(L) at t = q^N from the explicit R-matrix; a q-only LaurentQT."""
    Avec = _normalize_color(link, Avec)
    if color_is_zero(Avec):
        return LaurentQT.const(1)
    link, Avec = reduce_to_sublink(link, Avec)
    d = color_degrees(Avec)
    cabled, starts = cable(link, d)
    n = cabled.strands
    if n > max_strands:
        raise ResourceError("cabled braid would have %d strands (cap %d)" % (n, max_strands))
    projs = []
    for a, A in enumerate(Avec):
        if sum(A) > 1:
            projs.append((starts[link.strands_of(a)[0]], minimal_projection(A)))
    word = cabled.word

    def endo(st):
        for off, E in projs:
            st = apply_hecke(st, E, off)
        for x in reversed(word):
            st = crossing(st, x)
        return st

    tr, s_exp = quantum_trace(endo, n, N)
    # 2 d(L) = -sum w (kappa + N|A|) + (sum w |A|^2 + 2 sum lk |A||B|) / N
    L = link.num_components
    x_exp = -sum(w * (kappa(A) + N * sum(A)) for A, w in zip(Avec, link.writhes))
    s_corr = sum(w * sum(A) ** 2 for A, w in zip(Avec, link.writhes))
    s_corr += 2 * sum(link.lk(a, b) * sum(Avec[a]) * sum(Avec[b])
                      for a in range(L) for b in range(a + 1, L))
    if tr.is_zero():
        return LaurentQT()
    if s_exp + s_corr != 0:
        raise ConventionError("s-powers do not cancel: %d + %d" % (s_exp, s_corr))
    val = tr * RatFunc.monomial(x_exp)
    if not val.is_laurent():
        raise ConventionError("explicit-N invariant is not a Laurent polynomial")
    return LaurentQT.from_terms({(a, 0): c for a, c in val.laurent_terms().items()})


def _solve_ratfunc(M, rhs):
    """Gaussian elimination over Q(x) for a square system of RatFunc entries."""
    n = len(M)
    A = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not A[r][col].is_zero()), None)
        if piv is None:
            raise ResolutionError("singular Vandermonde system")
        A[col], A[piv] = A[piv], A[col]
        inv = RatFunc(1) / A[col][col]
        A[col] = [c * inv for c in A[col]]
        for r in range(n):
            if r != col and not A[r][col].is_zero():
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


def interpolate_t(link, Avec, max_N=10, max_strands=8):
    """Reconstruct W_A(q, t) from explicit-N values.

    The bracket-cleared numerator W * prod [h]^2 = sum_b c_b(q) t^{b/2} is
    evaluated at t = q^N; for a window of candidate t-exponents b this is a
    Vandermonde system in q^{N/2} over Q(q^{1/2}).  The window (and with it
    the sample set) grows until two consecutive reconstructions agree, all
    c_b are Laurent polynomials, and one held-out N is reproduced.
    """
    Avec = _normalize_color(link, Avec)
    if color_is_zero(Avec):
        return InvariantValue(Avec, RationalQT(1), [])
    sub, subA = reduce_to_sublink(link, Avec)
    den = hook_denominator(subA)
    bl = LaurentQT.const(1)
    for h, k in den.items():
        bl = bl * (LaurentQT.from_terms({(-h, 0): 1, (h, 0): -1}) ** (2 * k))
    n_cable = sum(sum(A) * len(sub.strands_of(a)) for a, A in enumerate(subA))
    _, b_fr = framing_monomial(sub, subA)
    center = b_fr + (n_cable % 2)
    n_min = 1
    values = {}

    def sample(N):
        if N not in values:
            w = invariant_at_N(sub, subA, N, max_strands=max_strands)
            f = RatFunc(0)
            for (a, _), c in (w * bl).terms().items():
                f = f + RatFunc.monomial(a, c)
            values[N] = f
        return values[N]

    previous = None
    m = 0
    while True:
        bs = [center + 2 * k for k in range(-m, m + 1)]
        Ns = list(range(n_min, n_min + len(bs)))
        held = Ns[-1] + 1
        if held > max_N:
            raise ResolutionError("interpolation did not converge with N <= %d" % max_N)
        M = [[RatFunc.monomial(N * b) for b in bs] for N in Ns]
        sol = _solve_ratfunc(M, [sample(N) for N in Ns])
        current = None
        if all(c.is_laurent() for c in sol):
            terms = {}
            for b, c in zip(bs, sol):
                for a, v in c.laurent_terms().items():
                    terms[(a, b)] = v
            pred = RatFunc(0)
            for (a, b), v in terms.items():
                pred = pred + RatFunc.monomial(a + held * b, v)
            if pred == sample(held):
                current = terms
        if current is not None and current == previous:
            value = RationalQT(LaurentQT.from_terms(current), den).reduced()
            return InvariantValue(Avec, value, Ns + [held])
        previous = current
        m += 1


# ----- power-sum colours and the cabling oracle ----------------------------

def zhat_character_sum(link, muvec):
    """Z^_mu = sum_A chi_A(mu) W_A (unframed)."""
    total = RationalQT()
    for Avec in colors_of_degrees(color_degrees(muvec)):
        chi = 1
        for A, mu in zip(Avec, muvec):
            chi *= character(A, mu) if A or mu else 1
        if chi:
            total = total + colored_invariant(link, Avec) * chi
    return total.reduced()


def framed_zhat_by_cabling(link, nuvec):
    """Blackboard-framed Z^_nu computed on the cable L_nu with one-row power-sum colours.

    Each parallel copy carrying the power sum p_k is expanded over hook
    colours H with weight chi_H((k)); framing is stripped with the cable's
    own writhes so that the result is the plain trace of the braid.
    """
    link, nuvec = reduce_to_sublink(link, nuvec)
    lens = tuple(len(nu) for nu in nuvec)
    cabled, starts = cable(link, lens)
    # part attached to each cable component: copy j of component a gets nu^a_j
    part_of = {}
    for a, nu in enumerate(nuvec):
        first = link.strands_of(a)[0]
        for j in range(len(nu)):
            part_of[cabled.component_of_strand[starts[first] - 1 + j]] = nu[j]
    parts = [part_of[c] for c in range(cabled.num_components)]
    total = RationalQT()
    for hooks_choice in product(*[_hook_partitions(k) for k in parts]):
        chi = 1
        for H, k in zip(hooks_choice, parts):
            chi *= character(H, (k,))
        w = colored_invariant(cabled, hooks_choice)
        a2, b2 = framing_monomial(cabled, hooks_choice)
        total = total + w * LaurentQT.monomial(-a2, -b2) * chi
    return total.reduced()


def _hook_partitions(k):
    return [tuple([k - j] + [1] * j) for j in range(k)]


def framed_zhat_by_characters(link, nuvec):
    """sum_A chi_A(nu) W_A with the framing correction removed."""
    link, nuvec = reduce_to_sublink(link, nuvec)
    total = RationalQT()
    for Avec in colors_of_degrees(color_degrees(nuvec)):
        chi = 1
        for A, nu in zip(Avec, nuvec):
            chi *= character(A, nu)
        if chi:
            a2, b2 = framing_monomial(link, Avec)
            total = total + colored_invariant(link, Avec) * LaurentQT.monomial(-a2, -b2) * chi
    return total.reduced()


def zhat_powersum(link, muvec):
    """Z^_mu(L) by the character sum, cross-checked against the cabling path.

    The cabling path produces blackboard-framed power-sum traces for every
    nu of the same degrees; the unframed value is recovered through the
    convolution sum_A chi_A(mu) q^{-kappa w/2} t^{-|A| w/2} sum_nu chi_A(nu)/z_nu Z^fr_nu.
    """
    muvec = tuple(tuple(m) for m in muvec)
    direct = zhat_character_sum(link, muvec)
    sub, submu = reduce_to_sublink(link, muvec)
    degs = color_degrees(submu)
    framed = {}
    for nuvec in colors_of_degrees(degs):
        framed[nuvec] = framed_zhat_by_cabling(sub, nuvec)
        check = framed_zhat_by_characters(sub, nuvec)
        if not framed[nuvec] == check:
            raise ConsistencyError("cabling identity fails for %r at nu = %r" % (link, nuvec))
    via_cable = RationalQT()
    for Avec in colors_of_degrees(degs):
        chi_mu = 1
        for A, mu in zip(Avec, submu):
            chi_mu *= character(A, mu)
        if not chi_mu:
            continue
        inner = RationalQT()
        for nuvec, val in framed.items():
            c = 1
            z = 1
            for A, nu in zip(Avec, nuvec):
                c *= character(A, nu)
                z *= z_of(nu)
            if c:
                inner = inner + val * Fraction(c, z)
        a2, b2 = framing_monomial(sub, Avec)
        via_cable = via_cable + inner * LaurentQT.monomial(a2, b2) * chi_mu
    via_cable = via_cable.reduced()
    if not via_cable == direct:
        raise ConsistencyError("power-sum paths disagree for %r, mu = %r" % (link, muvec))
    return InvariantValue(muvec, direct, "character-sum; cabling oracle agrees")
