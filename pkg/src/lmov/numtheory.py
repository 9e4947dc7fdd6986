"""Congruences behind the p-adic part of the integrality argument.

Everything is exact big-integer arithmetic; there are no modular shortcuts.
"""

import random
from itertools import product
from math import comb, factorial, gcd
from functools import reduce

from .combinatorics import compositions, partitions_of
from .qt_ring import LaurentQT, RationalQT, ord_p
from .symfun import SymFun, plethystic_power

SWEEP_PRIMES = (2, 3, 5)
SWEEP_R = (1, 2)
SWEEP_MAX_A = 6


def multinomial(parts):
    out = factorial(sum(parts))
    for a in parts:
        out //= factorial(a)
    return out


def check_binomial_congruence(p, r, a, b):
    """C(p^r a, p^r b) - C(p^{r-1} a, p^{r-1} b) = 0 mod p^{2r}."""
    if not 0 <= b <= a:
        raise ValueError("need 0 <= b <= a")
    if r < 1:
        raise ValueError("need r >= 1")
    big, small = p ** r, p ** (r - 1)
    return (comb(big * a, big * b) - comb(small * a, small * b)) % p ** (2 * r) == 0


def check_multinomial_congruence(p, r, parts):
    """multinomial(p^r a; p^r a_i) = multinomial(p^{r-1} a; p^{r-1} a_i) mod p^{2r}."""
    parts = tuple(parts)
    if any(a <= 0 for a in parts):
        raise ValueError("parts must be positive")
    if r < 1:
        raise ValueError("need r >= 1")
    big, small = p ** r, p ** (r - 1)
    diff = multinomial([big * a for a in parts]) - multinomial([small * a for a in parts])
    return diff % p ** (2 * r) == 0


def check_gcd_divisibility(a, parts):
    """a / gcd(parts) divides the multinomial coefficient (a; parts)."""
    parts = tuple(parts)
    if sum(parts) != a:
        raise ValueError("parts must sum to a")
    g = reduce(gcd, parts)
    return multinomial(parts) % (a // g) == 0


def check_power_congruence(a, p, r):
    """a^{p^r} - a^{p^{r-1}} = 0 mod p^r."""
    return (a ** (p ** r) - a ** (p ** (r - 1))) % p ** r == 0


def _power(f, n):
    out = None
    base = f
    while n:
        if n & 1:
            out = base if out is None else out * base
        n >>= 1
        if n:
            base = base * base
    return out


def _frobenius(f, p):
    """f(y^p; q^p, t^p)."""
    if isinstance(f, SymFun):
        return plethystic_power(f, p, coefficients=True)
    return f.subs_power(p)


def fermat_valuation(f, p, r):
    """Ord_p(f^{p^{r+1}} - f(y^p; q^p, t^p)^{p^r}); None when the difference vanishes."""
    diff = _power(f, p ** (r + 1)) - _power(_frobenius(f, p), p ** r)
    if isinstance(diff, SymFun):
        cs = [RationalQT.coerce(c) for c in diff.to_schur().terms.values()]
        cs = [c for c in cs if not c.is_zero()]
        return ord_p(cs, p) if cs else None
    if diff.is_zero():
        return None
    return ord_p(diff, p)


def check_fermat_valuation(f, p, r):
    """The valuation is at least r + 1 (vacuous when the difference is zero)."""
    v = fermat_valuation(f, p, r)
    return v is None or v >= r + 1


# ----- exhaustive sweeps ----------------------------------------------------

def sweep_binomial(primes=SWEEP_PRIMES, rs=SWEEP_R, max_a=SWEEP_MAX_A):
    bad = []
    for p, r in product(primes, rs):
        for a in range(0, max_a + 1):
            for b in range(0, a + 1):
                if not check_binomial_congruence(p, r, a, b):
                    bad.append((p, r, a, b))
    return bad


def sweep_multinomial(primes=SWEEP_PRIMES, rs=SWEEP_R, max_a=SWEEP_MAX_A):
    bad = []
    for p, r in product(primes, rs):
        for a in range(1, max_a + 1):
            for parts in compositions(a):
                if not check_multinomial_congruence(p, r, parts):
                    bad.append((p, r, parts))
    return bad


def sweep_gcd(max_a=SWEEP_MAX_A):
    bad = []
    for a in range(1, max_a + 1):
        for parts in compositions(a):
            if not check_gcd_divisibility(a, parts):
                bad.append((a, parts))
    return bad


def random_laurent(rng, n_terms=5, span=3, coeff=5):
    terms = {}
    for _ in range(rng.randint(1, n_terms)):
        key = (2 * rng.randint(-span, span), rng.randint(-span, span))
        terms[key] = rng.randint(-coeff, coeff) or 1
    return LaurentQT.from_terms(terms)


def random_schur(rng, max_deg=2, n_terms=3):
    """Integral combination of s_B(y) with random Laurent coefficients."""
    terms = {}
    for _ in range(rng.randint(1, n_terms)):
        d = rng.randint(1, max_deg)
        B = rng.choice(partitions_of(d))
        terms[(B,)] = random_laurent(rng, n_terms=2, span=1, coeff=3)
    return SymFun("s", terms, alphabet="y")


def sweep_fermat(primes=SWEEP_PRIMES, rs=SWEEP_R, samples=4, seed=0):
    """Random f with at most five terms; a smaller symmetric-function sweep at p = 2."""
    rng = random.Random(seed)
    bad = []
    for p, r in product(primes, rs):
        for _ in range(samples):
            f = random_laurent(rng)
            if not check_fermat_valuation(f, p, r):
                bad.append((p, r, f))
    for r in (0, 1):
        for _ in range(samples):
            f = random_schur(rng, max_deg=1 if r else 2)
            if not check_fermat_valuation(f, 2, r):
                bad.append((2, r, f))
    return bad


def run_all():
    """{name: list of failures}; every list must be empty."""
    return {
        "binomial": sweep_binomial(),
        "multinomial": sweep_multinomial(),
        "gcd": sweep_gcd(),
        "power": [(a, p, r) for p, r in product(SWEEP_PRIMES, SWEEP_R)
                  for a in range(0, 2 * SWEEP_MAX_A) if not check_power_congruence(a, p, r)],
        "fermat": sweep_fermat(),
    }


__all__ = ["multinomial", "check_binomial_congruence", "check_multinomial_congruence",
           "check_gcd_divisibility", "check_power_congruence", "fermat_valuation",
           "check_fermat_valuation", "sweep_binomial", "sweep_multinomial", "sweep_gcd",
           "sweep_fermat", "run_all"]
