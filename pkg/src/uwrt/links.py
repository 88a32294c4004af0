"""Framed oriented links presented as braid closures.

A link is a braid word on ``s`` strands (letter ``+i`` is the Artin
generator sigma_i, ``-i`` its inverse, ``1 <= i < s``) together with one
integer framing per closure component.  Components are the cycles of the
permutation induced by the word, ordered by smallest strand index; strand
indices are 1-based in the public data and in the JSON format.

Orientation and chirality conventions are pinned by the catalog: a positive
letter is a right-handed crossing, so the closure of sigma_1^3 is the
right-hand trefoil and [-1, -1, -1] the left-hand trefoil.  Surgery on the
left-hand trefoil with framing -1 is the Poincare homology sphere, which is
the anchor the rest of the package is tested against.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UnknownName
from .qcalc import prime_factors


@dataclass(frozen=True)
class FramedLink:
    strands: int
    word: tuple[int, ...]
    framings: tuple[int, ...]
    name: str | None = None

    def __init__(self, strands, word=(), framings=(), name=None):
        object.__setattr__(self, "strands", int(strands))
        object.__setattr__(self, "word", tuple(int(x) for x in word))
        object.__setattr__(self, "framings", tuple(int(x) for x in framings))
        object.__setattr__(self, "name", name)
        if self.strands < 0:
            raise ValueError("strand count must be >= 0")
        for letter in self.word:
            if letter == 0 or abs(letter) >= self.strands:
                raise ValueError(f"letter {letter} invalid on {self.strands} strands")
        ncomp = len(components(self))
        if ncomp != len(self.framings):
            raise ValueError(
                f"{ncomp} closure components but {len(self.framings)} framings"
            )

    def key(self) -> tuple:
        return (self.strands, self.word, self.framings)

    def to_json(self) -> dict:
        out = {"strands": self.strands, "word": list(self.word), "framings": list(self.framings)}
        if self.name is not None:
            out["name"] = self.name
        return out

    @staticmethod
    def from_json(obj: dict) -> "FramedLink":
        return FramedLink(obj["strands"], obj["word"], obj["framings"], obj.get("name"))


def permutation(link: FramedLink) -> list[int]:
    """0-based map from starting strand to its position at the top of the braid."""
    pos_of_wire = list(range(link.strands))
    wire_at_pos = list(range(link.strands))
    for letter in link.word:
        g = abs(letter) - 1
        w1, w2 = wire_at_pos[g], wire_at_pos[g + 1]
        wire_at_pos[g], wire_at_pos[g + 1] = w2, w1
        pos_of_wire[w1], pos_of_wire[w2] = g + 1, g
    return pos_of_wire


def components(link: FramedLink) -> list[tuple[int, ...]]:
    """Cycles of the closure permutation as 1-based strand tuples, ordered by
    smallest member."""
    perm = permutation(link)
    seen = [False] * link.strands
    cycles = []
    for start in range(link.strands):
        if seen[start]:
            continue
        cyc = []
        p = start
        while not seen[p]:
            seen[p] = True
            cyc.append(p + 1)
            p = perm[p]
        cycles.append(tuple(cyc))
    return cycles


def component_of_strand(link: FramedLink) -> list[int]:
    """0-based component index for each 0-based strand."""
    out = [0] * link.strands
    for ci, cyc in enumerate(components(link)):
        for s in cyc:
            out[s - 1] = ci
    return out


def crossing_signs_by_pair(link: FramedLink) -> dict[tuple[int, int], int]:
    """Signed crossing counts between (unordered, possibly equal) component
    pairs, keyed by sorted component-index pairs."""
    comp = component_of_strand(link)
    wire_at_pos = list(range(link.strands))
    counts: dict[tuple[int, int], int] = {}
    for letter in link.word:
        g = abs(letter) - 1
        sign = 1 if letter > 0 else -1
        c1, c2 = comp[wire_at_pos[g]], comp[wire_at_pos[g + 1]]
        key = (c1, c2) if c1 <= c2 else (c2, c1)
        counts[key] = counts.get(key, 0) + sign
        wire_at_pos[g], wire_at_pos[g + 1] = wire_at_pos[g + 1], wire_at_pos[g]
    return counts


def self_writhes(link: FramedLink) -> list[int]:
    """Signed self-crossing count of each component in the braid diagram."""
    n = len(components(link))
    out = [0] * n
    for (c1, c2), s in crossing_signs_by_pair(link).items():
        if c1 == c2:
            out[c1] = s
    return out


@dataclass(frozen=True)
class LinkingMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in rows))
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError("linking matrix must be symmetric")

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def negate(self) -> "LinkingMatrix":
        return LinkingMatrix([[-x for x in r] for r in self.rows])

    def det(self) -> int:
        return _int_det([list(r) for r in self.rows])


def _int_det(a: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def linking_matrix(link: FramedLink) -> LinkingMatrix:
    """Linking numbers off the diagonal (half the signed inter-component
    crossing count), declared framings on the diagonal."""
    n = len(components(link))
    rows = [[0] * n for _ in range(n)]
    for (c1, c2), s in crossing_signs_by_pair(link).items():
        if c1 != c2:
            if s % 2:
                raise ArithmeticError("odd inter-component crossing count")
            rows[c1][c2] = rows[c2][c1] = s // 2
    for i, b in enumerate(link.framings):
        rows[i][i] = b
    return LinkingMatrix(rows)


def signature_counts(a: LinkingMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts, computed exactly by
    congruence diagonalization over the rationals."""
    n = a.size
    m = [[Fraction(x) for x in row] for row in a.rows]
    pos = neg = zero = 0
    idx = list(range(n))
    while idx:
        # find a nonzero diagonal pivot among remaining indices
        piv = next((i for i in idx if m[i][i]), None)
        if piv is None:
            # all diagonal zero: find off-diagonal nonzero and symmetrize
            pair = None
            for i in idx:
                for j in idx:
                    if i != j and m[i][j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(idx)
                break
            i, j = pair
            # congruence by adding row/col j to i makes m[i][i] = 2*m[i][j] != 0
            for t in range(n):
                m[i][t] += m[j][t]
            for t in range(n):
                m[t][i] += m[t][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        idx = [i for i in idx if i != piv]
        for i in idx:
            if m[i][piv]:
                coef = m[i][piv] / d
                for t in range(n):
                    m[i][t] -= coef * m[piv][t]
        for i in idx:
            if m[piv][i]:
                coef = m[piv][i] / d
                for t in range(n):
                    m[t][i] -= coef * m[t][piv]
    return pos, neg, zero


def smith_normal_form(rows: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix (full list,
    including zeros), entries nonnegative with divisibility d1 | d2 | ..."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return []
    mcols = len(a[0])

    def find_pivot(s):
        best = None
        for i in range(s, n):
            for j in range(s, mcols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    s = 0
    while s < min(n, mcols):
        piv = find_pivot(s)
        if piv is None:
            break
        i0, j0 = piv
        a[s], a[i0] = a[i0], a[s]
        for r in a:
            r[s], r[j0] = r[j0], r[s]
        progressed = False
        while not progressed:
            progressed = True
            for i in range(s + 1, n):
                if a[i][s]:
                    k = a[i][s] // a[s][s]
                    for t in range(mcols):
                        a[i][t] -= k * a[s][t]
                    if a[i][s]:
                        a[s], a[i] = a[i], a[s]
                        progressed = False
            if not progressed:
                continue
            for j in range(s + 1, mcols):
                if a[s][j]:
                    k = a[s][j] // a[s][s]
                    for r in a:
                        r[j] -= k * r[s]
                    if a[s][j]:
                        for r in a:
                            r[s], r[j] = r[j], r[s]
                        progressed = False
        # ensure divisibility of the remaining block
        fixed = False
        for i in range(s + 1, n):
            for j in range(s + 1, mcols):
                if a[i][j] % a[s][s]:
                    for t in range(mcols):
                        a[s][t] += a[i][t]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        s += 1
    diag = [abs(a[i][i]) for i in range(min(n, mcols))]
    return diag


def h1_invariants(a: LinkingMatrix) -> list[int]:
    """Invariant factors (> 1) of the cokernel of the linking matrix: the
    torsion of the first homology of the surgered manifold."""
    diag = smith_normal_form([list(r) for r in a.rows])
    return [d for d in diag if d > 1]


def prime_power_decomposition(a: LinkingMatrix) -> list[int]:
    """Split each invariant factor into prime-power cyclic factors, sorted."""
    out: list[int] = []
    for d in h1_invariants(a):
        for p, e in prime_factors(d).items():
            out.append(p**e)
    return sorted(out)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^\s*([a-zA-Z_0-9]+)\s*(?:\(\s*([-0-9,\s]*)\s*\))?\s*$")


def catalog(name: str) -> FramedLink:
    """Named framed links.

    unknot(b), hopf(b1,b2), trefoil_left(b), trefoil_right(b), figure8(b),
    lens(b,1), poincare, s3.  ``poincare`` is the left-hand trefoil with
    framing -1; ``lens(b,1)`` is the b-framed unknot; ``s3`` is the empty
    surgery presentation.
    """
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownName(name)
    base = m.group(1)
    args = [int(x) for x in m.group(2).split(",")] if m.group(2) else []

    def need(k):
        if len(args) != k:
            raise UnknownName(f"{base} takes {k} argument(s), got {len(args)}")

    if base == "unknot":
        need(1)
        return FramedLink(1, [], [args[0]], name=name)
    if base == "lens":
        need(2)
        if args[1] != 1:
            raise UnknownName("only lens(b,1) presentations are available")
        return FramedLink(1, [], [args[0]], name=name)
    if base == "hopf":
        need(2)
        return FramedLink(2, [1, 1], args, name=name)
    if base == "trefoil_left":
        need(1)
        return FramedLink(2, [-1, -1, -1], [args[0]], name=name)
    if base == "trefoil_right":
        need(1)
        return FramedLink(2, [1, 1, 1], [args[0]], name=name)
    if base == "figure8":
        need(1)
        return FramedLink(3, [1, -2, 1, -2], [args[0]], name=name)
    if base == "poincare":
        need(0)
        return FramedLink(2, [-1, -1, -1], [-1], name="poincare")
    if base == "s3":
        need(0)
        return FramedLink(0, [], [], name="s3")
    raise UnknownName(name)


def split_disjoint(a: FramedLink, b: FramedLink, name: str | None = None) -> FramedLink:
    """Split (distant) union of two braid presentations."""
    word = list(a.word) + [letter + (a.strands if letter > 0 else -a.strands) for letter in b.word]
    return FramedLink(
        a.strands + b.strands,
        word,
        list(a.framings) + list(b.framings),
        name=name,
    )


def load_link(source: str) -> FramedLink:
    """A catalog name, or a path to a JSON link file."""
    try:
        return catalog(source)
    except UnknownName:
        pass
    try:
        with open(source) as fh:
            return FramedLink.from_json(json.load(fh))
    except FileNotFoundError:
        raise UnknownName(f"{source!r} is neither a catalog name nor a readable file")
