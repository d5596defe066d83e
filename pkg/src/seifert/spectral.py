"""Spectral sequence of the (d, D) bicomplex, the d2 zig-zag, and the K2
degeneration operator with its cohomology.

Filtration convention: F^p is spanned by configurations with E >= p, a
decreasing filtration of the total complex (differential D + d, total
grading Q).  Page subquotients are computed with

    Z_r^p = F^p  intersect  (D+d)^{-1}(F^{p+r})
    E_r^p = Z_r^p / (Z_{r-1}^{p+1} + (D+d)(Z_{r-1}^{p-r+1}))

so E_1 reproduces the D-cohomology and the page-r differential shifts
(Q, E) by (1, r).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .forest import Forest
from .complexes import ChainVector, SeifertComplex
from .gf2 import Gf2Matrix, Subspace, kernel_basis, rank, solve


@dataclass(frozen=True)
class SpectralPage:
    r: int
    dims: Dict[Tuple[int, int], int]  # (Q, E) -> dimension

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())


@dataclass(frozen=True)
class ZigzagClass:
    source: Tuple[int, int]
    target: Tuple[int, int]
    representative: ChainVector
    coords: frozenset  # indices into the SH representative basis at target


class TotalComplex:
    """The total complex in grading Q, with per-degree bases ordered by
    ascending E then canonical order within each bidegree."""

    def __init__(self, sc: SeifertComplex):
        self.sc = sc
        v = sc.vertex_count
        self.blocks: Dict[int, List[Tuple[int, int]]] = {}  # q -> [(e, off)]
        self.dims: Dict[int, int] = {}
        for q in range(v + 1):
            off = 0
            blocks = []
            for e in range(q, v + 1):
                n = sc.dim(q, e)
                if n:
                    blocks.append((e, off))
                    off += n
            self.blocks[q] = blocks
            self.dims[q] = off
        self._bound: Dict[int, Gf2Matrix] = {}

    def dim(self, q: int) -> int:
        return self.dims.get(q, 0)

    def offset(self, q: int, e: int) -> int:
        for be, off in self.blocks.get(q, []):
            if be == e:
                return off
        raise KeyError((q, e))

    def boundary(self, q: int) -> Gf2Matrix:
        """Matrix of D + d from degree q to degree q + 1."""
        if q in self._bound:
            return self._bound[q]
        src_dim = self.dim(q)
        tgt_dim = self.dim(q + 1)
        rows = [0] * tgt_dim
        for e, src_off in self.blocks.get(q, []):
            for which, te in (("D", e), ("d", e + 1)):
                if self.sc.dim(q + 1, te) == 0:
                    continue
                m = self.sc.matrix(which, q, e)
                tgt_off = self.offset(q + 1, te)
                for i, r in enumerate(m.rows):
                    rows[tgt_off + i] ^= r << src_off
        mat = Gf2Matrix.from_rows(rows, src_dim)
        self._bound[q] = mat
        return mat

    def filtration_mask(self, q: int, p: int) -> int:
        """Coordinate mask of F^p in degree q (entries with E >= p)."""
        mask = 0
        for e, off in self.blocks.get(q, []):
            if e >= p:
                n = self.sc.dim(q, e)
                mask |= ((1 << n) - 1) << off
        return mask

    def e_of_coord(self, q: int) -> List[int]:
        out = []
        for e, off in self.blocks.get(q, []):
            out.extend([e] * self.sc.dim(q, e))
        return out


class SpectralSequence:
    """Page dimensions of the E-filtration spectral sequence of a forest."""

    def __init__(self, f: Forest):
        self.forest = f
        self.sc = SeifertComplex(f)
        self.total = TotalComplex(self.sc)
        self._z: Dict[Tuple[int, int, int], Subspace] = {}

    def _cycles(self, r: int, p: int, q: int) -> Subspace:
        """Z_r^p in degree q: x supported on E >= p with boundary supported
        on E >= p + r."""
        key = (r, p, q)
        if key in self._z:
            return self._z[key]
        n = self.total.dim(q)
        if n == 0:
            sub = Subspace(0)
        else:
            rows = []
            low_mask = self.total.filtration_mask(q, p) ^ ((1 << n) - 1)
            while low_mask:
                b = low_mask & -low_mask
                low_mask ^= b
                rows.append(b)
            bnd = self.total.boundary(q)
            tgt_low = self.total.filtration_mask(q + 1, p + r) \
                ^ ((1 << self.total.dim(q + 1)) - 1)
            for i, row in enumerate(bnd.rows):
                if (tgt_low >> i) & 1:
                    rows.append(row)
            sub = kernel_basis(Gf2Matrix.from_rows(rows, n))
        self._z[key] = sub
        return sub

    def entry_dim(self, r: int, p: int, q: int) -> int:
        z = self._cycles(r, p, q)
        if z.dim == 0:
            return 0
        newer = self._cycles(r - 1, p + 1, q)
        prev = self._cycles(r - 1, p - r + 1, q - 1) if q >= 1 else Subspace(0)
        if prev.dim:
            bnd = self.total.boundary(q - 1)
            image = Subspace.from_vectors(
                [bnd.mul_vec(v) for v in prev.basis], self.total.dim(q))
        else:
            image = Subspace(self.total.dim(q))
        return z.dim - newer.sum(image).dim

    def page(self, r: int) -> SpectralPage:
        if r < 1:
            raise ValueError("page index must be >= 1")
        v = self.forest.vertex_count
        dims: Dict[Tuple[int, int], int] = {}
        for q in range(v + 1):
            for p in range(q, v + 1):
                d = self.entry_dim(r, p, q)
                if d:
                    dims[(q, p)] = d
        return SpectralPage(r, dims)

    def limit(self) -> SpectralPage:
        return self.page(self.forest.vertex_count + 1)


def page_dims(f: Forest, r: int) -> SpectralPage:
    return SpectralSequence(f).page(r)


def limit_dim(f: Forest, sc: Optional[SeifertComplex] = None) -> int:
    """Total dimension of the stabilized page: the spectral sequence of a
    finite filtered complex converges, so this is the total cohomology of
    (SC, D + d)."""
    total = TotalComplex(sc if sc is not None else SeifertComplex(f))
    v = f.vertex_count
    out = 0
    ranks = {q: rank(total.boundary(q)) for q in range(v + 1)}
    for q in range(v + 1):
        out += total.dim(q) - ranks.get(q, 0) - ranks.get(q - 1, 0)
    return out


def d1_on_sh(sc: SeifertComplex) -> Dict[Tuple[int, int], Gf2Matrix]:
    """The page-1 differential induced by d, per bidegree: a matrix from the
    SH representative basis at (q, e) to the one at (q+1, e+1)."""
    out: Dict[Tuple[int, int], Gf2Matrix] = {}
    for q, e in sc.bidegrees():
        src = sc.sh(q, e)
        if not src.dim:
            continue
        tgt = sc.sh(q + 1, e + 1)
        rows = [0] * tgt.dim
        for j, rep in enumerate(src.reps):
            image = _apply_bidegree(sc, "d", q, e, rep)
            tags, _ = tgt.coords(image)
            for i in tags:
                rows[i] |= 1 << j
        out[(q, e)] = Gf2Matrix.from_rows(rows, src.dim)
    return out


def _apply_bidegree(sc: SeifertComplex, which: str, q: int, e: int,
                    bits: int) -> int:
    te = e if which == "D" else e + 1
    if sc.dim(q + 1, te) == 0:
        return 0
    return sc.matrix(which, q, e).mul_vec(bits)


def d2_zigzag(sc: SeifertComplex, x: ChainVector) -> ZigzagClass:
    """d2 of a D-cocycle x at (q, e): split d(x) = h + D(y) with h the
    canonical representative of the d1-obstruction, then take the SH class
    of d(y) at (q+1, e+2)."""
    q, e = x.bidegree
    if _apply_bidegree(sc, "D", q, e, x.bits):
        raise ValueError("input chain is not D-closed")
    z = _apply_bidegree(sc, "d", q, e, x.bits)
    target = sc.sh(q + 1, e + 2)
    if sc.dim(q, e + 1) == 0:
        if z:
            raise ValueError("d-image not liftable: no chains at (q, e+1)")
        return ZigzagClass((q, e), (q + 1, e + 2),
                           ChainVector((q + 1, e + 2), 0), frozenset())
    mid = sc.matrix("D", q, e + 1)  # (q, e+1) -> (q+1, e+1)
    image = mid.column_space()
    h = image.reduce(z)
    y = solve(mid, z ^ h)
    assert y is not None
    w = _apply_bidegree(sc, "d", q, e + 1, y)
    coords, _ = target.coords(w)
    return ZigzagClass((q, e), (q + 1, e + 2),
                       ChainVector((q + 1, e + 2), target.class_rep(w)),
                       coords)


@dataclass(frozen=True)
class K2Operator:
    """K2 on the full SH representative basis.

    basis[i] = (q, e, local index) sorted by (e, q, index); columns[i] is
    the image of basis vector i as a set of basis indices.
    """

    basis: Tuple[Tuple[int, int, int], ...]
    columns: Tuple[frozenset, ...]

    @property
    def matrix(self) -> Gf2Matrix:
        n = len(self.basis)
        rows = [0] * n
        for j, col in enumerate(self.columns):
            for i in col:
                rows[i] |= 1 << j
        return Gf2Matrix.from_rows(rows, n)

    def rank(self) -> int:
        return rank(self.matrix)


def degeneration_chain(sc: SeifertComplex, m: int) -> int:
    """Chain at (m-1, m) degenerating the zero-level class [m]: at every
    branch vertex v of odd degree >= 3, one spoke of v turns red and one
    minus sits on another spoke, while the remaining m-2 minuses run over
    the vertices outside the closed star of v.

    Each branch-vertex contribution is D-closed: the two resolutions of
    the red spoke cancel pairwise over the spoke pairs (this needs the
    odd degree).  Mirrors the componentwise action of the second-page
    differential of the branch on the zero level.
    """
    from itertools import combinations

    from .complexes import Configuration
    f = sc.forest
    if m < 2 or sc.dim(m - 1, m) == 0:
        return 0
    idx = sc.index(m - 1, m)
    bits = 0
    for v in range(f.vertex_count):
        spokes = f.neighbors(v)
        if len(spokes) < 3 or len(spokes) % 2 == 0:
            continue
        rest = [u for u in range(f.vertex_count)
                if u != v and u not in spokes]
        if len(rest) < m - 2:
            continue
        for free in combinations(rest, m - 2):
            mask = 0
            for u in free:
                mask |= 1 << u
            for x in spokes:
                edge = (min(v, x), max(v, x))
                for y in spokes:
                    if y != x:
                        c = Configuration((edge,), mask | (1 << y))
                        bits ^= 1 << idx[c]
    return bits


def k2_operator(f: Forest, sc: Optional[SeifertComplex] = None) -> K2Operator:
    """K2 sends the zero-level class [m] (m >= 2) to the class of its
    degeneration chain at (m-1, m) and vanishes on every other basis
    class.

    Zero-level classes [m] are only canonical on connected forests; on a
    disconnected forest K2 is taken to be zero.
    """
    if sc is None:
        sc = SeifertComplex(f)
    dims = sc.cohomology_dims()
    basis: List[Tuple[int, int, int]] = []
    pos: Dict[Tuple[int, int, int], int] = {}
    for (q, e), n in sorted(dims.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        for i in range(n):
            key = (q, e, i)
            pos[key] = len(basis)
            basis.append(key)
    columns: List[frozenset] = [frozenset()] * len(basis)
    if f.is_connected():
        for m in range(2, f.vertex_count + 1):
            key = (m, m, 0)
            if key not in pos:
                continue
            chain = degeneration_chain(sc, m)
            if not chain:
                continue
            coords, rem = sc.sh(m - 1, m).coords(chain)
            assert not rem, "degeneration chain is not a cocycle"
            columns[pos[key]] = frozenset(
                pos[(m - 1, m, i)] for i in coords)
    return K2Operator(tuple(basis), tuple(columns))


@dataclass(frozen=True)
class K2Generator:
    bidegree: Tuple[int, int]  # (Q, E)
    coords: Tuple[int, ...]    # indices into the SH basis at that bidegree
    chain: ChainVector         # representative in SC coordinates


def k2_cohomology(f: Forest) -> List[K2Generator]:
    """Basis of ker(K2)/im(K2), graded by (Q, E): K2 preserves E and drops
    Q by one, so the computation splits per bidegree."""
    sc = SeifertComplex(f)
    op = k2_operator(f, sc)
    pos = {key: i for i, key in enumerate(op.basis)}
    by_bidegree: Dict[Tuple[int, int], List[int]] = {}
    for q, e, i in op.basis:
        by_bidegree.setdefault((q, e), []).append(i)

    def block(src: Tuple[int, int], tgt: Tuple[int, int]) -> Gf2Matrix:
        """K2 restricted to SH(src) -> SH(tgt), in local indices."""
        sn = len(by_bidegree.get(src, []))
        tn = len(by_bidegree.get(tgt, []))
        rows = [0] * tn
        for j in range(sn):
            col = op.columns[pos[(src[0], src[1], j)]]
            for (tq, te, ti) in (op.basis[g] for g in col):
                if (tq, te) == tgt:
                    rows[ti] |= 1 << j
        return Gf2Matrix.from_rows(rows, sn)

    out: List[K2Generator] = []
    for (q, e), local in sorted(by_bidegree.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        n = len(local)
        down = block((q, e), (q - 1, e))
        kernel = kernel_basis(down) if not down.is_zero() else Subspace.full(n)
        up = block((q + 1, e), (q, e)) if by_bidegree.get((q + 1, e)) else None
        if up is not None and not up.is_zero():
            image = up.column_space()
        else:
            image = Subspace(n)
        span = image
        sh = sc.sh(q, e)
        for v in kernel.basis:
            rem = span.reduce(v)
            if rem:
                span = span.sum(Subspace.from_vectors([rem], n))
                chain = 0
                for i in range(n):
                    if (rem >> i) & 1:
                        chain ^= sh.reps[i]
                out.append(K2Generator(
                    (q, e),
                    tuple(i for i in range(n) if (rem >> i) & 1),
                    ChainVector((q, e), chain)))
    return out
