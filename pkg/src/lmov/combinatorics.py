"""Partitions, colour vectors and S-partitions over tuples of partitions.

Partitions are plain tuples of positive integers in non-increasing order,
the empty tuple being the partition of 0.  A colour vector is a tuple of
partitions, one per link component.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from functools import reduce
from math import factorial, gcd, prod

from sympy import factorint

DEFAULT_DEGREE_CAP = 8


class DegreeCapError(ValueError):
    """Raised when an enumeration would exceed the configured degree cap."""


def partition(parts):
    """Normalise an iterable of integers into a partition (zeros dropped)."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError("negative part in %r" % (parts,))
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def is_partition(lam):
    return (isinstance(lam, tuple) and all(isinstance(p, int) and p > 0 for p in lam)
            and all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)))


def size(lam):
    return sum(lam)


def length(lam):
    return len(lam)


def multiplicities(lam):
    """m_j(lam) as a Counter."""
    return Counter(lam)


def aut_order(lam):
    return prod(factorial(m) for m in Counter(lam).values())


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def z_of(lam):
    """Centraliser order prod_j j^{m_j} m_j!."""
    return prod(j ** m * factorial(m) for j, m in Counter(lam).items())


def kappa(lam):
    return sum(p * (p - 2 * j + 1) for j, p in enumerate(lam, start=1))


def union(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


def cut_joins(lam):
    """All partitions reachable by cutting one row or joining two rows."""
    cuts, joins = set(), set()
    parts = list(lam)
    for i, p in enumerate(parts):
        rest = parts[:i] + parts[i + 1:]
        for a in range(1, p // 2 + 1):
            cuts.add(partition(rest + [a, p - a]))
        for j in range(i + 1, len(parts)):
            rest2 = [parts[k] for k in range(len(parts)) if k != i and k != j]
            joins.add(partition(rest2 + [p + parts[j]]))
    return cuts, joins


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def divides(d, lam):
    return all(p % d == 0 for p in lam)


def divide(lam, d):
    return tuple(p // d for p in lam)


def scale(lam, d):
    return tuple(p * d for p in lam)


# ----- ordering on P and P^L ----------------------------------------------

def partition_key(lam):
    """Sort key realising the order on P: degree first, then lexicographic."""
    return (sum(lam), lam)


def color_key(vec):
    return (sum(sum(a) for a in vec), tuple(partition_key(a) for a in vec))


# ----- colour vectors -------------------------------------------------------

def color_vector(comps):
    return tuple(partition(a) for a in comps)


def color_degrees(vec):
    """|A| as the tuple of component degrees."""
    return tuple(sum(a) for a in vec)


def color_norm(vec):
    """||A|| = total degree over components."""
    return sum(sum(a) for a in vec)


def color_conjugate(vec):
    return tuple(conjugate(a) for a in vec)


def color_union(a, b):
    return tuple(union(x, y) for x, y in zip(a, b))


def color_is_zero(vec):
    return all(len(a) == 0 for a in vec)


def color_z(vec):
    return prod(z_of(a) for a in vec)


def color_length(vec):
    return sum(len(a) for a in vec)


def colors_of_degrees(degs):
    """All colour vectors with prescribed component degrees."""
    out = [()]
    for d in degs:
        out = [v + (lam,) for v in out for lam in partitions_of(d)]
    return out


def colors_up_to(L, cap):
    """All nonzero colour vectors with L components and ||A|| <= cap."""
    out = []
    for total in range(1, cap + 1):
        for degs in compositions_weak(total, L):
            out.extend(colors_of_degrees(degs))
    return out


def compositions_weak(n, k):
    """Weak compositions of n into k non-negative parts."""
    if k == 0:
        return [()] if n == 0 else []
    if k == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in compositions_weak(n - first, k - 1):
            out.append((first,) + rest)
    return out


def compositions(n):
    """Compositions of n (ordered positive parts)."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


# ----- S-partitions ---------------------------------------------------------

class SPartition:
    """A finite multiset of nonzero colour vectors.

    Parts are kept in canonical descending order so that equal multisets
    compare and hash equal.
    """

    __slots__ = ("parts", "_key")

    def __init__(self, parts):
        parts = [tuple(p) for p in parts]
        if not parts:
            raise ValueError("an S-partition needs at least one part")
        for p in parts:
            if color_is_zero(p):
                raise ValueError("zero part in S-partition")
        self.parts = tuple(sorted(parts, key=color_key, reverse=True))
        self._key = self.parts

    def __eq__(self, other):
        return isinstance(other, SPartition) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "SPartition(%r)" % (self.parts,)

    def __iter__(self):
        return iter(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def multiplicities(self):
        return Counter(self.parts)

    @property
    def aut(self):
        return prod(factorial(m) for m in Counter(self.parts).values())

    @property
    def u(self):
        return factorial(self.length) // self.aut

    @property
    def theta(self):
        ell = self.length
        return Fraction((-1) ** (ell - 1) * self.u, ell)

    def union(self):
        """|Lambda|: componentwise union of the parts."""
        L = len(self.parts[0])
        out = tuple(() for _ in range(L))
        for p in self.parts:
            out = color_union(out, p)
        return out

    def norm(self):
        """||Lambda||: componentwise sum of part degrees."""
        L = len(self.parts[0])
        degs = [0] * L
        for p in self.parts:
            for i, a in enumerate(p):
                degs[i] += sum(a)
        return tuple(degs)


def repeat(sp, d):
    """Each part of sp repeated d times."""
    if d < 1:
        raise ValueError("d must be positive")
    return SPartition([p for p in sp.parts for _ in range(d)])


def _sub_colors(target):
    """All nonzero sub-colour-vectors beta of target (componentwise sub-multisets)."""
    per = []
    for lam in target:
        cnt = Counter(lam)
        keys = sorted(cnt)
        subs = [()]
        for k in keys:
            subs = [s + (k,) * m for s in subs for m in range(cnt[k] + 1)]
        per.append(sorted({partition(s) for s in subs}, key=partition_key))
    out = [()]
    for choices in per:
        out = [v + (c,) for v in out for c in choices]
    return [v for v in out if not color_is_zero(v)]


def _color_minus(a, b):
    out = []
    for lam, mu in zip(a, b):
        c = Counter(lam)
        c.subtract(Counter(mu))
        if any(m < 0 for m in c.values()):
            return None
        out.append(partition(c.elements()))
    return tuple(out)


def enumerate_spartitions(target, cap=DEFAULT_DEGREE_CAP):
    """All S-partitions whose componentwise union equals the colour vector target."""
    target = tuple(tuple(a) for a in target)
    if color_norm(target) > cap:
        raise DegreeCapError("||target|| = %d exceeds cap %d" % (color_norm(target), cap))
    if color_is_zero(target):
        return []
    return [SPartition(p) for p in _union_splits(target, None)]


@lru_cache(maxsize=None)
def _union_splits(target, bound):
    # parts emitted in non-increasing color_key order; bound is the largest allowed part
    if color_is_zero(target):
        return ((),)
    out = []
    for beta in sorted(_sub_colors(target), key=color_key, reverse=True):
        if bound is not None and color_key(beta) > color_key(bound):
            continue
        rest = _color_minus(target, beta)
        for tail in _union_splits(rest, beta):
            out.append((beta,) + tail)
    return tuple(out)


def enumerate_spartitions_by_norm(degs, cap=DEFAULT_DEGREE_CAP):
    """All S-partitions whose parts' degree vectors sum to degs (||A|| = degs)."""
    degs = tuple(degs)
    if sum(degs) > cap:
        raise DegreeCapError("degree %d exceeds cap %d" % (sum(degs), cap))
    if sum(degs) == 0:
        return []
    return [SPartition(p) for p in _norm_splits(degs, None)]


@lru_cache(maxsize=None)
def _norm_splits(degs, bound):
    if sum(degs) == 0:
        return ((),)
    out = []
    cands = []
    for sub in _weak_below(degs):
        if sum(sub) == 0:
            continue
        cands.extend(colors_of_degrees(sub))
    for beta in sorted(cands, key=color_key, reverse=True):
        if bound is not None and color_key(beta) > color_key(bound):
            continue
        rest = tuple(a - b for a, b in zip(degs, color_degrees(beta)))
        for tail in _norm_splits(rest, beta):
            out.append((beta,) + tail)
    return tuple(out)


def _weak_below(degs):
    out = [()]
    for d in degs:
        out = [v + (k,) for v in out for k in range(d + 1)]
    return out


@lru_cache(maxsize=None)
def mobius(d):
    if d < 1:
        raise ValueError("mobius needs d >= 1")
    if d == 1:
        return 1
    f = factorint(d)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def common_divisors_of_color(vec):
    """Positive d dividing every part of every component of vec."""
    parts = [p for a in vec for p in a]
    if not parts:
        return [1]
    g = reduce(gcd, parts)
    return divisors(g)


def color_gcd(vec):
    parts = [p for a in vec for p in a]
    return reduce(gcd, parts) if parts else 0
