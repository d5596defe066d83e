"""Configurations on a forest, the differentials D and d, and the bigraded
cohomology of (SC, D).

A configuration marks every vertex plus or minus except the endpoints of a
chosen matching of "red" edges, which are matched.  Gradings:

    q = number of minus marks
    e = q + number of red edges

D resolves one red edge into the two plus/minus orderings of its endpoints
(bidegree shift (1, 0)); d flips one plus to a minus (shift (1, 1)).  Both
are extended by the Leibniz rule over GF(2), so duplicate terms cancel.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

from .forest import Forest, Matching, matchings_by_size
from .gf2 import Gf2Matrix, Subspace, kernel_basis, rank
from .poly import BiPolynomial


class Configuration(NamedTuple):
    """red_edges: sorted matching edges; minus_mask: bit v set iff vertex v
    is marked minus.  Unmatched vertices without a minus bit are plus."""

    red_edges: Tuple[Tuple[int, int], ...]
    minus_mask: int

    @property
    def q(self) -> int:
        return self.minus_mask.bit_count()

    @property
    def e(self) -> int:
        return self.q + len(self.red_edges)

    def matched_mask(self) -> int:
        m = 0
        for a, b in self.red_edges:
            m |= (1 << a) | (1 << b)
        return m

    def marks(self, vertex_count: int) -> List[str]:
        matched = self.matched_mask()
        out = []
        for v in range(vertex_count):
            if (matched >> v) & 1:
                out.append("o")
            elif (self.minus_mask >> v) & 1:
                out.append("-")
            else:
                out.append("+")
        return out


@dataclass(frozen=True)
class ChainVector:
    """Vector in SC^q(f, e), bits over the canonical configuration basis."""

    bidegree: Tuple[int, int]
    bits: int


def apply_D(c: Configuration) -> List[Configuration]:
    """Resolve each red edge into (+,-) + (-,+); terms of bidegree (q+1, e)."""
    counts: Dict[Configuration, int] = {}
    for i, (a, b) in enumerate(c.red_edges):
        rest = c.red_edges[:i] + c.red_edges[i + 1:]
        for minus_v in (a, b):
            term = Configuration(rest, c.minus_mask | (1 << minus_v))
            counts[term] = counts.get(term, 0) ^ 1
    return sorted(t for t, odd in counts.items() if odd)


def apply_d(f: Forest, c: Configuration) -> List[Configuration]:
    """Flip each plus to a minus; terms of bidegree (q+1, e+1)."""
    free = ((1 << f.vertex_count) - 1) & ~c.matched_mask() & ~c.minus_mask
    counts: Dict[Configuration, int] = {}
    while free:
        bit = free & -free
        free ^= bit
        term = Configuration(c.red_edges, c.minus_mask | bit)
        counts[term] = counts.get(term, 0) ^ 1
    return sorted(t for t, odd in counts.items() if odd)


def config_count(f: Forest) -> int:
    """Total number of configurations: sum over matchings R of 2^(V-2|R|)."""
    total = 0
    for size, group in enumerate(matchings_by_size(f)):
        total += len(group) << (f.vertex_count - 2 * size)
    return total


def _submasks(vertex_mask: int, k: int):
    """All k-subsets of the set bits of vertex_mask, as masks, ascending."""
    bits = []
    m = vertex_mask
    while m:
        b = m & -m
        bits.append(b)
        m ^= b
    for combo in combinations(bits, k):
        yield sum(combo)


class SeifertComplex:
    """Per-forest cache of configuration bases, differential matrices and
    cohomology data, built lazily per bidegree."""

    def __init__(self, f: Forest):
        self.forest = f
        self._matchings = matchings_by_size(f)
        self._basis: Dict[Tuple[int, int], List[Configuration]] = {}
        self._index: Dict[Tuple[int, int], Dict[Configuration, int]] = {}
        self._mat: Dict[Tuple[str, int, int], Gf2Matrix] = {}
        self._sh: Dict[Tuple[int, int], "SHBasis"] = {}

    @property
    def vertex_count(self) -> int:
        return self.forest.vertex_count

    @property
    def max_e(self) -> int:
        return self.vertex_count

    def basis(self, q: int, e: int) -> List[Configuration]:
        """Canonical ordered basis of SC^q(f, e): red-edge sets in matching
        enumeration (lexicographic) order, minus masks ascending."""
        key = (q, e)
        if key in self._basis:
            return self._basis[key]
        configs: List[Configuration] = []
        r = e - q
        if 0 <= q and 0 <= r < len(self._matchings):
            full = (1 << self.vertex_count) - 1
            for m in self._matchings[r]:
                matched = 0
                for a, b in m.edges:
                    matched |= (1 << a) | (1 << b)
                free = full & ~matched
                if free.bit_count() < q:
                    continue
                masks = sorted(_submasks(free, q))
                configs.extend(Configuration(m.edges, mm) for mm in masks)
        self._basis[key] = configs
        self._index[key] = {c: i for i, c in enumerate(configs)}
        return configs

    def dim(self, q: int, e: int) -> int:
        return len(self.basis(q, e))

    def index(self, q: int, e: int) -> Dict[Configuration, int]:
        self.basis(q, e)
        return self._index[(q, e)]

    def bidegrees(self) -> List[Tuple[int, int]]:
        """All (q, e) with nonzero SC, sorted by (e, q)."""
        out = []
        for e in range(self.max_e + 1):
            for q in range(e + 1):
                if self.dim(q, e):
                    out.append((q, e))
        return sorted(out, key=lambda p: (p[1], p[0]))

    def to_vector(self, configs, q: int, e: int) -> int:
        idx = self.index(q, e)
        bits = 0
        for c in configs:
            bits ^= 1 << idx[c]
        return bits

    def matrix(self, which: str, q: int, e: int) -> Gf2Matrix:
        """Matrix of D: (q,e)->(q+1,e) or d: (q,e)->(q+1,e+1), canonical
        basis order on both sides."""
        if which not in ("D", "d"):
            raise ValueError("differential must be 'D' or 'd'")
        key = (which, q, e)
        if key in self._mat:
            return self._mat[key]
        src = self.basis(q, e)
        tq, te = (q + 1, e) if which == "D" else (q + 1, e + 1)
        tgt_index = self.index(tq, te)
        rows = [0] * self.dim(tq, te)
        for j, c in enumerate(src):
            terms = apply_D(c) if which == "D" else apply_d(self.forest, c)
            for t in terms:
                rows[tgt_index[t]] |= 1 << j
        m = Gf2Matrix.from_rows(rows, len(src))
        self._mat[key] = m
        return m

    def sh(self, q: int, e: int) -> "SHBasis":
        key = (q, e)
        if key not in self._sh:
            self._sh[key] = SHBasis(self, q, e)
        return self._sh[key]

    def cohomology_dims(self) -> Dict[Tuple[int, int], int]:
        """dim SH^q(f, e) at every bidegree with nonzero SC; zero entries
        are dropped."""
        dims: Dict[Tuple[int, int], int] = {}
        for q, e in self.bidegrees():
            n = self.dim(q, e)
            rank_out = rank(self.matrix("D", q, e)) if self.dim(q + 1, e) else 0
            rank_in = rank(self.matrix("D", q - 1, e)) if q >= 1 and self.dim(q - 1, e) else 0
            d = n - rank_out - rank_in
            if d:
                dims[(q, e)] = d
        return dims

    def poincare_polynomial(self) -> BiPolynomial:
        return BiPolynomial.from_dict(
            {k: v for k, v in self.cohomology_dims().items()})

    def cohomology_basis(self, q: int, e: int) -> List[ChainVector]:
        return [ChainVector((q, e), bits) for bits in self.sh(q, e).reps]


class SHBasis:
    """Canonical representatives for SH^q(f, e) with coordinate extraction.

    The internal echelon merges the image of D (untagged rows) with the
    accepted representatives (tagged rows); reducing any cocycle through it
    yields its coefficients over the representative basis.
    """

    def __init__(self, sc: SeifertComplex, q: int, e: int):
        self.bidegree = (q, e)
        self.ambient = sc.dim(q, e)
        if self.ambient == 0:
            self.image = Subspace(0)
            self.reps: List[int] = []
            self._rows: List[Tuple[int, int, frozenset]] = []
            return
        if q >= 1 and sc.dim(q - 1, e):
            self.image = sc.matrix("D", q - 1, e).column_space()
        else:
            self.image = Subspace(self.ambient)
        if sc.dim(q + 1, e):
            kernel = kernel_basis(sc.matrix("D", q, e))
        else:
            kernel = Subspace.full(self.ambient)
        rows: List[Tuple[int, int, frozenset]] = [
            (p, r, frozenset())
            for p, r in zip(self.image.pivots, self.image.basis)]
        rows.sort()
        self.reps = []
        for v in kernel.basis:
            tags, rem = self._reduce(rows, v)
            if rem:
                idx = len(self.reps)
                self.reps.append(rem)
                p = (rem & -rem).bit_length() - 1
                rows.append((p, rem, frozenset([idx])))
                rows.sort()
        self._rows = rows

    @staticmethod
    def _reduce(rows, v: int) -> Tuple[frozenset, int]:
        tags: frozenset = frozenset()
        for p, r, t in rows:
            if (v >> p) & 1:
                v ^= r
                tags ^= t
        return tags, v

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, bits: int) -> Tuple[frozenset, int]:
        """Coefficients of a vector over the representative basis, plus the
        unreducible remainder (zero for any D-cocycle)."""
        return self._reduce(self._rows, bits)

    def class_rep(self, bits: int) -> int:
        """Canonical representative of the class of a cocycle."""
        tags, _ = self.coords(bits)
        out = 0
        for i in tags:
            out ^= self.reps[i]
        return out


def cohomology_dims(f: Forest) -> Dict[Tuple[int, int], int]:
    return SeifertComplex(f).cohomology_dims()


def poincare_polynomial(f: Forest) -> BiPolynomial:
    return SeifertComplex(f).poincare_polynomial()


def enumerate_configs(f: Forest, q: int, e: int) -> List[Configuration]:
    return SeifertComplex(f).basis(q, e)


def differential_matrix(f: Forest, which: str, q: int, e: int) -> Gf2Matrix:
    return SeifertComplex(f).matrix(which, q, e)


def cohomology_basis(f: Forest, q: int, e: int) -> List[ChainVector]:
    return SeifertComplex(f).cohomology_basis(q, e)
