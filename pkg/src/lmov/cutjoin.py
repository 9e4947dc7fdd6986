"""Cut-and-join operators on truncated formal power series in p_1, p_2, ...

A FormalSeries stores terms keyed by (mu, i, j) meaning

    c * p_mu * tau^i * u^j

where mu is a colour vector (one partition per set of power sums), tau is
the framing parameter of a single chosen component and u = log q.  Both are
formal symbols; everything is truncated at weighted p-degree D and at
tau-order K.
"""

from fractions import Fraction
from math import factorial

from .combinatorics import (color_degrees, color_norm, color_union, colors_of_degrees,
                            colors_up_to, kappa, partition, partitions_of, z_of)
from .qt_ring import LaurentQT, RationalQT
from .symfun import character, color_character


def _is_zero(c):
    if isinstance(c, (RationalQT, LaurentQT)):
        return c.is_zero()
    return c == 0


def _add(d, k, c):
    if k in d:
        v = d[k] + c
        if _is_zero(v):
            del d[k]
        else:
            d[k] = v
    elif not _is_zero(c):
        d[k] = c


class FormalSeries:
    """Truncated series in power sums with coefficients in Q or RationalQT."""

    __slots__ = ("L", "D", "K", "terms")

    def __init__(self, L, D, K=0, terms=None):
        self.L = L
        self.D = D
        self.K = K
        self.terms = {}
        for (mu, i, j), c in (terms or {}).items():
            mu = tuple(partition(a) for a in mu)
            if color_norm(mu) <= D and i <= K:
                _add(self.terms, (mu, i, j), c)

    @classmethod
    def one(cls, L, D, K=0):
        return cls(L, D, K, {(tuple(() for _ in range(L)), 0, 0): Fraction(1)})

    def like(self, terms):
        return FormalSeries(self.L, self.D, self.K, terms)

    def __repr__(self):
        return "FormalSeries(L=%d, D=%d, K=%d, %d terms)" % (self.L, self.D, self.K,
                                                              len(self.terms))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return self.like(out)

    def __neg__(self):
        return self.like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return self.like({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return self.scale(other)
        out = {}
        for (m1, i1, j1), c1 in self.terms.items():
            n1 = color_norm(m1)
            for (m2, i2, j2), c2 in other.terms.items():
                if n1 + color_norm(m2) > self.D or i1 + i2 > self.K:
                    continue
                _add(out, (color_union(m1, m2), i1 + i2, j1 + j2), c1 * c2)
        return self.like(out)

    def __eq__(self, other):
        return isinstance(other, FormalSeries) and (self - other).is_zero()

    def constant_term(self):
        return self.terms.get((tuple(() for _ in range(self.L)), 0, 0), 0)

    # calculus ----------------------------------------------------------------
    def d_p(self, alpha, i):
        """Partial derivative with respect to p_i of the alpha-th set."""
        out = {}
        for (mu, a, b), c in self.terms.items():
            lam = list(mu[alpha])
            m = lam.count(i)
            if not m:
                continue
            lam.remove(i)
            nmu = mu[:alpha] + (tuple(lam),) + mu[alpha + 1:]
            _add(out, (nmu, a, b), c * m)
        return self.like(out)

    def times_p(self, alpha, parts):
        """Multiply by p_{parts[0]} p_{parts[1]} ... in the alpha-th set."""
        out = {}
        for (mu, a, b), c in self.terms.items():
            nmu = mu[:alpha] + (partition(mu[alpha] + tuple(parts)),) + mu[alpha + 1:]
            _add(out, (nmu, a, b), c)
        return self.like(out)

    def d_tau(self):
        out = {}
        for (mu, a, b), c in self.terms.items():
            if a:
                _add(out, (mu, a - 1, b), c * a)
        return self.like(out)

    def times_u(self, c=1):
        return self.like({(mu, a, b + 1): v * c for (mu, a, b), v in self.terms.items()})

    def truncate_tau(self, K):
        return FormalSeries(self.L, self.D, K, {k: c for k, c in self.terms.items() if k[1] <= K})


def _max_index(f, alpha):
    return max((p for (mu, _, _) in f.terms for p in mu[alpha]), default=0)


def exp_cutjoin(f, alpha=0):
    """sum_{i,j} ( ij p_{i+j} d^2/dp_i dp_j + (i+j) p_i p_j d/dp_{i+j} ) f."""
    out = f.like({})
    top = max(_max_index(f, alpha), 1)
    firsts = {i: f.d_p(alpha, i) for i in range(1, top + 1)}
    for i in range(1, top + 1):
        for j in range(1, top + 1):
            second = firsts[i].d_p(alpha, j)
            if not second.is_zero():
                out = out + second.times_p(alpha, (i + j,)).scale(i * j)
    for n in range(2, top + 1):
        first = firsts[n]
        if first.is_zero():
            continue
        for i in range(1, n):
            out = out + first.times_p(alpha, (i, n - i)).scale(n)
    return out


def log_cutjoin(F, alpha=0):
    """Linear part of exp_cutjoin plus sum_{i,j} ij p_{i+j} (dF/dp_i)(dF/dp_j)."""
    out = exp_cutjoin(F, alpha)
    top = _max_index(F, alpha)
    firsts = {i: F.d_p(alpha, i) for i in range(1, top + 1)}
    for i in range(1, top + 1):
        for j in range(1, top + 1):
            if firsts[i].is_zero() or firsts[j].is_zero():
                continue
            out = out + (firsts[i] * firsts[j]).times_p(alpha, (i + j,)).scale(i * j)
    return out


def series_log(Z):
    """log Z for a series with constant term 1."""
    one = FormalSeries.one(Z.L, Z.D, Z.K)
    X = Z - one
    out = Z.like({})
    power = one
    for n in range(1, Z.D + Z.K + 1):
        power = power * X
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (n + 1), n))
    return out


def series_exp(F):
    """exp F for a series without constant term."""
    one = FormalSeries.one(F.L, F.D, F.K)
    out = one
    power = one
    for n in range(1, F.D + F.K + 1):
        power = power * F
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, factorial(n)))
    return out


def schur_series(A, L=1, alpha=0, D=None, coeff=1):
    """s_A in the alpha-th set as a FormalSeries."""
    A = tuple(A)
    D = sum(A) if D is None else D
    terms = {}
    for mu in partitions_of(sum(A)):
        chi = character(A, mu)
        if chi:
            key = tuple(mu if b == alpha else () for b in range(L))
            terms[(key, 0, 0)] = Fraction(chi, z_of(mu)) * coeff
    return FormalSeries(L, D, 0, terms)


def check_schur_eigen(n):
    """E s_A = kappa_A s_A for every A of size n; returns the failures."""
    bad = []
    for A in partitions_of(n):
        s = schur_series(A)
        if not exp_cutjoin(s) == s.scale(kappa(A)):
            bad.append(A)
    return bad


def check_cut_join_support(n):
    """Nonzero transitions of E in the p-basis are exactly the cuts and joins."""
    from .combinatorics import cut_joins
    bad = []
    for mu in partitions_of(n):
        f = FormalSeries(1, n, 0, {((mu,), 0, 0): Fraction(1)})
        image = {nu[0] for (nu, _, _) in exp_cutjoin(f).terms}
        cuts, joins = cut_joins(mu)
        if image != cuts | joins:
            bad.append(mu)
    return bad


def framed_partition_function(Z, alpha, K):
    """sum_A W_A exp(kappa_{A^alpha} u tau / 2) s_A(x), expanded to tau-order K."""
    L, D = Z.L, Z.cap
    out = FormalSeries.one(L, D, K)
    for Avec in colors_up_to(L, D):
        W = Z[Avec]
        kap = kappa(Avec[alpha])
        for mu in colors_of_degrees(color_degrees(Avec)):
            chi = color_character(Avec, mu)
            if not chi:
                continue
            z = 1
            for lam in mu:
                z *= z_of(lam)
            base = W * Fraction(chi, z)
            for n in range(K + 1):
                c = base * (Fraction(kap, 2) ** n / factorial(n))
                out = out + FormalSeries(L, D, K, {(mu, n, n): c})
    return out


def verify_framed_cutjoin(link, cap=2, K=2, alpha=0, Z=None):
    """dZ/dtau = (u/2) E Z and dF/dtau = (u/2) L F as formal identities."""
    from .lmov_pipeline import build_Z
    Z = Z or build_Z(link, cap)
    Zs = framed_partition_function(Z, alpha, K)
    lhs = Zs.d_tau()
    rhs = exp_cutjoin(Zs, alpha).times_u(Fraction(1, 2))
    exp_ok = lhs.truncate_tau(K - 1) == rhs.truncate_tau(K - 1)
    F = series_log(Zs)
    lhs = F.d_tau()
    rhs = log_cutjoin(F, alpha).times_u(Fraction(1, 2))
    log_ok = lhs.truncate_tau(K - 1) == rhs.truncate_tau(K - 1)
    return {"ok": exp_ok and log_ok, "exponential": exp_ok, "log": log_ok,
            "cap": Z.cap, "tau_order": K}


def check_log_exp(F):
    """L F = e^{-F} E e^{F} for a series F without constant term."""
    E = series_exp(F)
    lhs = log_cutjoin(F)
    rhs = series_exp(-F) * exp_cutjoin(E)
    return lhs == rhs
