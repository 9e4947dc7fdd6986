"""Independent HOMFLY oracle: skein recursion on descending braid diagrams.

P is normalised by P(unknot) = 1 and satisfies

    t^{1/2} P(L+) - t^{-1/2} P(L-) = (q^{1/2} - q^{-1/2}) P(L0)

where L+ carries a positive braid letter.  At a positive letter +i the
strand coming from position i passes over; at -i the strand coming from
position i+1 passes over.  This module never touches the R-matrix or the
Hecke algebra.
"""

from functools import lru_cache

from .braid_link import BraidWord, LinkPresentation
from .qt_ring import RationalQT, bracket, t_pow

# z = q^{1/2} - q^{-1/2} = -[1]
_Z = RationalQT(-bracket(1))


def _delta():
    # (t^{1/2} - t^{-1/2}) / (q^{1/2} - q^{-1/2}) = (t^{-1/2} - t^{1/2}) / [1]
    return RationalQT(t_pow(-1) - t_pow(1)).div_bracket(1)


def _first_bad_crossing(strands, word):
    """Index of the first crossing met from below while walking the components, or None."""
    link = LinkPresentation(BraidWord(strands, word))
    comp = link.component_of_strand
    seen = set()
    for c in range(link.num_components):
        start = comp.index(c)
        pos = start
        while True:
            for k, x in enumerate(word):
                i = abs(x) - 1
                if pos == i:
                    over = x > 0
                    nxt = i + 1
                elif pos == i + 1:
                    over = x < 0
                    nxt = i
                else:
                    continue
                if k not in seen:
                    if not over:
                        return k
                    seen.add(k)
                pos = nxt
            if pos == start:
                break
    return None


@lru_cache(maxsize=None)
def _homfly(strands, word):
    k = _first_bad_crossing(strands, word)
    if k is None:
        ncomp = LinkPresentation(BraidWord(strands, word)).num_components
        return _delta() ** (ncomp - 1)
    x = word[k]
    switched = word[:k] + (-x,) + word[k + 1:]
    smoothed = word[:k] + word[k + 1:]
    p_sw = _homfly(strands, switched)
    p_sm = _homfly(strands, smoothed)
    if x > 0:
        # P+ = t^{-1} P- + t^{-1/2} z P0
        return p_sw * t_pow(-2) + p_sm * _Z * t_pow(-1)
    # P- = t P+ - t^{1/2} z P0
    return p_sw * t_pow(2) - p_sm * _Z * t_pow(1)


def homfly(link):
    """HOMFLY polynomial of a closed braid as a RationalQT (poles only at [1])."""
    return _homfly(link.strands, tuple(link.word)).reduced()


def fundamental_invariant(link):
    """t^{lk} dim_q V_(1) P_L: the fundamental-colour invariant predicted by the skein side."""
    dim = RationalQT(t_pow(-1) - t_pow(1)).div_bracket(1)
    return (homfly(link) * dim * t_pow(2 * link.total_linking())).reduced()

