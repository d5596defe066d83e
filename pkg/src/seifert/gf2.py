"""Dense exact linear algebra over GF(2), rows packed into Python ints.

A matrix row is a single int whose bit j is the entry in column j.  All the
homological computations in this package reduce to rank / kernel / solve
calls here, so the inner loops are plain word-wide XORs on ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional


def _lowbit(x: int) -> int:
    """Index of the least significant set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


def _forward_eliminate(rows) -> dict:
    """Echelon table pivot -> row; reduction only visits set bits."""
    table: dict[int, int] = {}
    for r in rows:
        while r:
            p = (r & -r).bit_length() - 1
            row = table.get(p)
            if row is None:
                table[p] = r
                break
            r ^= row
    return table


def _rref(rows: List[int]) -> tuple[List[int], List[int]]:
    """Reduced row echelon form; pivot of a row is its lowest set bit.

    Returns (rows, pivots), both sorted by increasing pivot.  Each pivot
    column has a 1 only in its own row.
    """
    table = _forward_eliminate(rows)
    pivots = sorted(table)
    # clear foreign pivot bits, highest pivot rows first so every row we
    # subtract is already fully reduced
    for p in reversed(pivots):
        r = table[p]
        x = r & (r - 1)  # bits above the pivot (the pivot is the low bit)
        while x:
            q = (x & -x).bit_length() - 1
            other = table.get(q)
            if other is not None:
                r ^= other
            x = r & ~((1 << (q + 1)) - 1)
        table[p] = r
    return [table[p] for p in pivots], pivots


@dataclass(frozen=True)
class Gf2Matrix:
    """rows x cols matrix over GF(2); rows[i] bit j is entry (i, j)."""

    nrows: int
    ncols: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("nonzero padding bits")

    @classmethod
    def from_rows(cls, rows, ncols: int) -> "Gf2Matrix":
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Gf2Matrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def mul_vec(self, x: int) -> int:
        """Matrix-vector product; x is a column vector over the ncols bits."""
        y = 0
        for i, r in enumerate(self.rows):
            if (r & x).bit_count() & 1:
                y |= 1 << i
        return y

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = _lowbit(r)
                cols[j] |= 1 << i
                r &= r - 1
        return Gf2Matrix(self.ncols, self.nrows, tuple(cols))

    def column_space(self) -> "Subspace":
        """Span of the columns, as vectors of length nrows."""
        return Subspace.from_vectors(self.transpose().rows, self.nrows)

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        ot = other.transpose()
        rows = []
        for r in self.rows:
            acc = 0
            for j, c in enumerate(ot.rows):
                if (r & c).bit_count() & 1:
                    acc |= 1 << j
            rows.append(acc)
        return Gf2Matrix(self.nrows, other.ncols, tuple(rows))

    def is_zero(self) -> bool:
        return not any(self.rows)


def rank(m: Gf2Matrix) -> int:
    """Rank over GF(2) by forward elimination (lowest-bit pivots)."""
    return len(_forward_eliminate(m.rows))


@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(2)^ambient_dim, basis in reduced row echelon form."""

    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def from_vectors(cls, vectors, ambient_dim: int) -> "Subspace":
        rows, pivots = _rref(list(vectors))
        return cls(ambient_dim, tuple(rows), tuple(pivots))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_vectors([1 << i for i in range(ambient_dim)], ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: int) -> int:
        """Canonical coset representative: zero at every pivot coordinate.

        Idempotent and constant on cosets of the subspace; returns 0 iff v
        lies in the subspace.
        """
        for p, r in zip(self.pivots, self.basis):
            if (v >> p) & 1:
                v ^= r
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(list(self.basis) + list(other.basis),
                                     self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: eliminate [x|x] and [y|0] rows; zero-left rows give
        a basis of the intersection in the right block."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        n = self.ambient_dim
        mask = (1 << n) - 1
        stacked = [v | (v << n) for v in self.basis] + list(other.basis)
        rows, _ = _rref(stacked)
        inter = [r >> n for r in rows if not (r & mask)]
        return Subspace.from_vectors(inter, n)

    def quotient_dim(self, sub: "Subspace") -> int:
        if self.ambient_dim != sub.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if not self.contains_subspace(sub):
            raise ValueError("not a subspace")
        return self.dim - sub.dim


def canonical_coset_rep(sub: Subspace, v: int) -> int:
    if v >> sub.ambient_dim:
        raise ValueError("vector outside ambient space")
    return sub.reduce(v)


def kernel_basis(m: Gf2Matrix) -> Subspace:
    """Basis of {x : m @ x = 0} as a Subspace of GF(2)^ncols."""
    rows, pivots = _rref(list(m.rows))
    pivot_set = set(pivots)
    gens = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, rows):
            if (r >> f) & 1:
                v |= 1 << p
        gens.append(v)
    return Subspace.from_vectors(gens, m.ncols)


def solve(m: Gf2Matrix, b: int) -> Optional[int]:
    """One solution of m @ x = b (free variables zero), or None.

    Deterministic: after echelon reduction every non-pivot coordinate of x
    is set to zero.
    """
    if b >> m.nrows:
        raise ValueError("right-hand side outside row space dimension")
    aug = [r | (((b >> i) & 1) << m.ncols) for i, r in enumerate(m.rows)]
    rows, pivots = _rref(aug)
    bbit = 1 << m.ncols
    x = 0
    for p, r in zip(pivots, rows):
        if p == m.ncols:
            return None  # row 0 = 1: inconsistent
        if r & bbit:
            x |= 1 << p
    # free variables are zero, so each pivot equation reads x_p = b-entry
    return x
