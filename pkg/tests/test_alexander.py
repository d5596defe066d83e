"""Alexander polynomial: four methods against each other and sympy."""

import sympy

from seifert import (IntPolynomial, alexander_det, alexander_euler,
                     alexander_matchings, alexander_recursive,
                     disjoint_union, dynkin, monodromy, monodromy_char_poly,
                     path, seifert_matrix, star)
from seifert.alexander import bareiss_det, monodromy_verified

from conftest import random_forest


def sympy_delta(f):
    """Independent oracle: det(tS - S^T) expanded by sympy."""
    t = sympy.Symbol("t")
    s = sympy.Matrix(seifert_matrix(f))
    p = sympy.Poly((t * s - s.T).det(method="berkowitz"), t)
    coeffs = [int(c) for c in reversed(p.all_coeffs())]
    return IntPolynomial.from_coeffs(coeffs)


def test_det_matches_sympy(rng):
    for f in [path(1), path(5), dynkin("D", 6), dynkin("E", 7), star(6)] + \
            [random_forest(rng, vmax=9) for _ in range(15)]:
        assert alexander_det(f) == sympy_delta(f)


def test_bareiss_matches_sympy(rng):
    for _ in range(30):
        n = rng.randint(0, 6)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == int(sympy.Matrix(n, n, lambda i, j: m[i][j]).det())


def test_known_values():
    # 1 - t + t^2 (trefoil) and the e6/e8 torus-knot polynomials
    assert alexander_det(path(2)) == IntPolynomial.from_coeffs([1, -1, 1])
    assert alexander_det(dynkin("E", 6)) == \
        IntPolynomial.from_coeffs([1, -1, 0, 1, 0, -1, 1])
    assert alexander_det(dynkin("E", 8)) == \
        IntPolynomial.from_coeffs([1, -1, 0, 1, -1, 1, 0, -1, 1])


def test_d_family_closed_form():
    for n in range(4, 11):
        coeffs = [0] * (n + 1)
        coeffs[0], coeffs[1] = 1, -1
        coeffs[n - 1] += (-1) ** (n - 1)
        coeffs[n] += (-1) ** n
        assert alexander_det(dynkin("D", n)) == IntPolynomial.from_coeffs(coeffs)


def test_four_methods_agree(rng):
    for _ in range(40):
        f = random_forest(rng, vmax=10)
        delta = alexander_det(f)
        assert alexander_matchings(f) == delta
        assert alexander_recursive(f) == delta
        assert alexander_euler(f) == delta
        assert monodromy_char_poly(f) == delta


def test_monodromy_is_integral_and_verified(rng):
    for f in [dynkin("E", 6), star(5)] + \
            [random_forest(rng, vmax=8) for _ in range(10)]:
        m, ok = monodromy_verified(f)
        assert ok
        # (S^T)^-1 S must be exactly integral
        t = sympy.Symbol("t")
        s = sympy.Matrix(seifert_matrix(f))
        if f.vertex_count:
            expect = s.T.inv() * s
            assert sympy.Matrix(m) == expect


def test_multiplicative_over_union(rng):
    for _ in range(10):
        f = random_forest(rng, vmax=6)
        g = random_forest(rng, vmax=6)
        assert alexander_det(disjoint_union(f, g)) == \
            alexander_det(f) * alexander_det(g)


def test_delta_at_one_is_matching_indicator(rng):
    from seifert import perfect_matching
    for _ in range(30):
        f = random_forest(rng, vmax=10)
        assert alexander_det(f)(1) == \
            (1 if perfect_matching(f) is not None else 0)
