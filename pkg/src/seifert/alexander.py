"""Alexander polynomial of a forest by four independent routes, plus the
Seifert and monodromy matrices.

All arithmetic is exact: determinants of integer matrices use Bareiss
fraction-free elimination, and polynomial determinants are recovered from
integer evaluations by exact interpolation.
"""

from __future__ import annotations

from typing import List, Tuple

from .forest import Forest, matchings_by_size, remove_vertices
from .poly import ONE, ONE_MINUS_T, IntPolynomial, interpolate

IntMatrix = List[List[int]]


def seifert_matrix(f: Forest) -> IntMatrix:
    """Upper-triangular, -1 on the diagonal, 1 at (i, j) for adjacent i < j."""
    n = f.vertex_count
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        s[i][i] = -1
    for a, b in f.edges:
        s[min(a, b)][max(a, b)] = 1
    return s


def bareiss_det(m: IntMatrix) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _char_like_det(build_entry, n: int) -> IntPolynomial:
    """det of an n x n matrix whose entries are degree <= 1 in t, via
    evaluation at t = 0..n and exact interpolation."""
    points = []
    for t in range(n + 1):
        m = [[build_entry(i, j, t) for j in range(n)] for i in range(n)]
        points.append((t, bareiss_det(m)))
    return interpolate(points)


def alexander_det(f: Forest) -> IntPolynomial:
    """det(tS - S^T) for the Seifert matrix S."""
    s = seifert_matrix(f)
    n = f.vertex_count

    def entry(i, j, t):
        return t * s[i][j] - s[j][i]

    return _char_like_det(entry, n)


def alexander_matchings(f: Forest) -> IntPolynomial:
    """Matching sum: sum over matchings R of t^|R| (1-t)^(V-2|R|)."""
    v = f.vertex_count
    pow_cache = {0: ONE}

    def one_minus_t_pow(k: int) -> IntPolynomial:
        if k not in pow_cache:
            pow_cache[k] = one_minus_t_pow(k - 1) * ONE_MINUS_T
        return pow_cache[k]

    total = IntPolynomial()
    for size, group in enumerate(matchings_by_size(f)):
        if not group:
            continue
        term = IntPolynomial.monomial(len(group), size) * one_minus_t_pow(v - 2 * size)
        total = total + term
    return total


def alexander_euler(f: Forest) -> IntPolynomial:
    """Graded Euler characteristic of Seifert cohomology: the Poincare
    polynomial at q = -1."""
    from .complexes import poincare_polynomial
    return poincare_polynomial(f).substitute_first(-1)


def alexander_recursive(f: Forest) -> IntPolynomial:
    """Hanging-vertex recursion: peel the lowest-labeled degree-1 vertex v
    with neighbor w; Delta(T) = (1-t) Delta(T\\v) + t Delta(T\\{v,w}).
    Isolated vertices contribute a (1-t) factor each."""
    degree = [0] * f.vertex_count
    for a, b in f.edges:
        degree[a] += 1
        degree[b] += 1
    leaf = next((v for v in range(f.vertex_count) if degree[v] == 1), None)
    if leaf is None:
        # no edges left: V isolated vertices
        out = ONE
        for _ in range(f.vertex_count):
            out = out * ONE_MINUS_T
        return out
    w = f.neighbors(leaf)[0]
    t1 = remove_vertices(f, [leaf])
    t2 = remove_vertices(f, [leaf, w])
    return ONE_MINUS_T * alexander_recursive(t1) + \
        IntPolynomial.monomial(1, 1) * alexander_recursive(t2)


def monodromy(f: Forest) -> IntMatrix:
    """M = (S^T)^{-1} S; integral because det S^T = (-1)^V."""
    s = seifert_matrix(f)
    n = f.vertex_count
    st = [[s[j][i] for j in range(n)] for i in range(n)]
    # forward substitution column by column: st is lower-triangular, -1 diag
    m = [[0] * n for _ in range(n)]
    for col in range(n):
        for i in range(n):
            acc = s[i][col]
            for k in range(i):
                acc -= st[i][k] * m[k][col]
            m[i][col] = acc // st[i][i]
    return m


def monodromy_char_poly(f: Forest) -> IntPolynomial:
    """det(E - t M) for the monodromy matrix."""
    m = monodromy(f)
    n = f.vertex_count

    def entry(i, j, t):
        return (1 if i == j else 0) - t * m[i][j]

    return _char_like_det(entry, n)


def monodromy_verified(f: Forest) -> Tuple[IntMatrix, bool]:
    """Monodromy matrix plus the det(E - tM) = det(tS - S^T) check."""
    return monodromy(f), monodromy_char_poly(f) == alexander_det(f)
