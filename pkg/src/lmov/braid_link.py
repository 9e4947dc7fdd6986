"""Braid words, their closures, cabling and a small catalogue of links."""

import hashlib
import json
import re
from fractions import Fraction


class BraidWord:
    """A word in the Artin generators of B_m; letters are signed 1-based indices."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters=()):
        strands = int(strands)
        if strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or abs(x) > strands - 1:
                raise ValueError("generator %d out of range for %d strands" % (x, strands))
        self.strands = strands
        self.letters = letters

    def __eq__(self, other):
        return (isinstance(other, BraidWord) and self.strands == other.strands
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __repr__(self):
        return "BraidWord(%d, %r)" % (self.strands, self.letters)

    def __len__(self):
        return len(self.letters)

    def permutation(self):
        """perm[p] = bottom position of the strand starting at top position p (0-based)."""
        pos = list(range(self.strands))  # pos[k] = strand label at position k
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        perm = [0] * self.strands
        for k, s in enumerate(pos):
            perm[s] = k
        return perm

    def writhe(self):
        return sum(1 if x > 0 else -1 for x in self.letters)


class LinkPresentation:
    """Closure of a braid with component bookkeeping."""

    def __init__(self, braid, name=None):
        self.braid = braid
        self.name = name
        perm = braid.permutation()
        comp = [-1] * braid.strands
        ncomp = 0
        for start in range(braid.strands):
            if comp[start] >= 0:
                continue
            p = start
            while comp[p] < 0:
                comp[p] = ncomp
                p = perm[p]
            ncomp += 1
        self.component_of_strand = tuple(comp)
        self.num_components = ncomp
        w = [0] * ncomp
        lk2 = [[0] * ncomp for _ in range(ncomp)]
        pos = list(range(braid.strands))
        for x in braid.letters:
            i = abs(x) - 1
            a, b = comp[pos[i]], comp[pos[i + 1]]
            s = 1 if x > 0 else -1
            if a == b:
                w[a] += s
            else:
                lk2[a][b] += s
                lk2[b][a] += s
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        self.writhes = tuple(w)
        self._lk2 = lk2

    def __repr__(self):
        return "LinkPresentation(%s, %r)" % (self.name or "?", self.braid)

    @property
    def word(self):
        return self.braid.letters

    @property
    def strands(self):
        return self.braid.strands

    def lk(self, a, b):
        """Linking number of components a and b (an integer for closed links)."""
        v = Fraction(self._lk2[a][b], 2)
        if v.denominator != 1:
            raise ValueError("odd mixed-crossing count; not a closed link")
        return int(v)

    def total_linking(self):
        L = self.num_components
        return sum(self.lk(a, b) for a in range(L) for b in range(a + 1, L))

    def strands_of(self, a):
        return [p for p, c in enumerate(self.component_of_strand) if c == a]

    def signed_crossings(self):
        return self.braid.writhe()

    def content_hash(self):
        payload = json.dumps({"strands": self.strands, "word": list(self.word)})
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_json(self):
        return {"strands": self.strands, "word": list(self.word), "name": self.name}


def close(braid):
    return LinkPresentation(braid)


def link_from_json(data):
    return LinkPresentation(BraidWord(data["strands"], data.get("word", [])), data.get("name"))


def cable(link, d):
    """Replace every strand of component a by d[a] parallel strands.

    Returns (cabled link, block_start) where block_start[p] is the 1-based
    position, at the top of the cabled braid, of the first parallel copy of
    original strand p.
    """
    d = tuple(int(x) for x in d)
    if len(d) != link.num_components:
        raise ValueError("cabling vector has length %d, link has %d components"
                         % (len(d), link.num_components))
    if any(x < 1 for x in d):
        raise ValueError("cabling multiplicities must be positive")
    comp = link.component_of_strand
    sizes = [d[comp[p]] for p in range(link.strands)]
    blocks = list(range(link.strands))  # original strand label at each block position
    out = []
    for x in link.word:
        i = abs(x) - 1
        a, b = sizes[blocks[i]], sizes[blocks[i + 1]]
        s = 1 + sum(sizes[blocks[k]] for k in range(i))
        sign = 1 if x > 0 else -1
        for j in range(a - 1, -1, -1):
            for k in range(b):
                out.append(sign * (s + j + k))
        blocks[i], blocks[i + 1] = blocks[i + 1], blocks[i]
    total = sum(sizes)
    starts = []
    acc = 1
    for p in range(link.strands):
        starts.append(acc)
        acc += sizes[p]
    cabled = LinkPresentation(BraidWord(total, out), name=None if link.name is None
                              else "%s_cable%s" % (link.name, list(d)))
    return cabled, tuple(starts)


def sublink(link, keep):
    """Delete every component not in `keep` (a set of component ids)."""
    keep = set(keep)
    comp = link.component_of_strand
    pos = list(range(link.strands))
    out = []
    for x in link.word:
        i = abs(x) - 1
        sa, sb = pos[i], pos[i + 1]
        if comp[sa] in keep and comp[sb] in keep:
            idx = sum(1 for k in range(i) if comp[pos[k]] in keep)
            out.append((idx + 1) * (1 if x > 0 else -1))
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    n = sum(1 for p in range(link.strands) if comp[p] in keep)
    if n == 0:
        return None
    return LinkPresentation(BraidWord(n, out))


def sublink_component_map(link, keep):
    """Old component id -> new component id after `sublink`."""
    keep = sorted(keep)
    sub = sublink(link, keep)
    old_strands = [p for p in range(link.strands) if link.component_of_strand[p] in keep]
    mapping = {}
    for new_p, old_p in enumerate(old_strands):
        mapping[link.component_of_strand[old_p]] = sub.component_of_strand[new_p]
    return sub, mapping


_TORUS = re.compile(r"^torus\((\d+),\s*(-?\d+)\)$")


def torus(m, n):
    word = [i for _ in range(abs(n)) for i in range(1, m)]
    if n < 0:
        word = [-x for x in word]
    return LinkPresentation(BraidWord(m, word), name="torus(%d,%d)" % (m, n))


def catalog(name):
    name = name.strip().lower().replace(" ", "")
    if name == "unknot":
        return LinkPresentation(BraidWord(1, ()), name="unknot")
    if name == "hopf":
        L = torus(2, 2)
        L.name = "hopf"
        return L
    if name == "trefoil":
        L = torus(2, 3)
        L.name = "trefoil"
        return L
    if name in ("figure8", "figure-eight"):
        return LinkPresentation(BraidWord(3, (1, -2, 1, -2)), name="figure8")
    m = _TORUS.match(name)
    if m:
        return torus(int(m.group(1)), int(m.group(2)))
    raise KeyError("unknown link %r" % name)


CATALOG_NAMES = ("unknot", "hopf", "trefoil", "figure8", "torus(2,5)", "torus(3,3)")
