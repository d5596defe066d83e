"""Configuration complex: bases, differentials, cohomology."""

import math

from seifert import (BiPolynomial, Forest, SeifertComplex, cohomology_dims,
                     config_count, disjoint_union, dynkin, path,
                     poincare_polynomial, star)
from seifert.complexes import Configuration, apply_D, apply_d

from conftest import random_forest


def p_a(n):
    return BiPolynomial.from_dict({(k, k): 1 for k in range(n + 1)})


def test_config_counts_small():
    assert config_count(Forest(0)) == 1
    assert config_count(dynkin("A", 1)) == 2
    assert config_count(dynkin("A", 2)) == 5  # ++, +-, -+, --, red
    assert config_count(dynkin("D", 4)) == 28


def test_config_count_matches_enumeration(rng):
    for _ in range(20):
        f = random_forest(rng, vmax=8)
        sc = SeifertComplex(f)
        total = sum(sc.dim(q, e) for q, e in sc.bidegrees())
        assert total == config_count(f)


def test_basis_gradings_and_disjointness():
    sc = SeifertComplex(dynkin("D", 5))
    seen = set()
    for q, e in sc.bidegrees():
        for c in sc.basis(q, e):
            assert c.q == q and c.e == e
            assert c not in seen
            seen.add(c)
            # red edges form a matching disjoint from the minus marks
            assert c.matched_mask() & c.minus_mask == 0


def test_differentials_anticommute_mod2(rng):
    # D^2 = d^2 = 0 and Dd = dD on every configuration of random forests
    for _ in range(10):
        f = random_forest(rng, vmax=7)
        sc = SeifertComplex(f)
        for q, e in sc.bidegrees():
            for c in sc.basis(q, e):
                dd = set()
                for t in apply_D(c):
                    dd ^= set(apply_D(t))
                assert not dd
                dd = set()
                for t in apply_d(f, c):
                    dd ^= set(apply_d(f, t))
                assert not dd
                lhs, rhs = set(), set()
                for t in apply_D(c):
                    lhs ^= set(apply_d(f, t))
                for t in apply_d(f, c):
                    rhs ^= set(apply_D(t))
                assert lhs == rhs


def test_poincare_a_series():
    for n in range(1, 8):
        assert poincare_polynomial(path(n)) == p_a(n)


def test_poincare_d4_and_e6():
    assert poincare_polynomial(dynkin("D", 4)) == \
        p_a(4) + BiPolynomial.monomial(1, 1, 2)
    qt2 = BiPolynomial.monomial(1, 1, 2)
    one_qt = BiPolynomial.from_dict({(0, 0): 1, (1, 1): 1})
    assert poincare_polynomial(dynkin("E", 6)) == \
        p_a(6) + qt2 * one_qt * p_a(1)


def test_poincare_star_closed_form():
    for n in range(4, 8):
        expect = p_a(n).as_dict()
        for e in range(2, n - 1):
            c = (n - 1) * math.comb(n - 2, e - 1) - math.comb(n, e) + 1
            if c:
                expect[(e - 1, e)] = expect.get((e - 1, e), 0) + c
        assert poincare_polynomial(star(n)) == BiPolynomial.from_dict(expect)


def test_poincare_multiplicative_over_union(rng):
    for _ in range(10):
        f = random_forest(rng, vmax=5)
        g = random_forest(rng, vmax=5)
        assert poincare_polynomial(disjoint_union(f, g)) == \
            poincare_polynomial(f) * poincare_polynomial(g)


def test_duality(rng):
    for f in [dynkin("D", 5), dynkin("E", 6), star(6)] + \
            [random_forest(rng, vmax=8) for _ in range(10)]:
        v = f.vertex_count
        dims = cohomology_dims(f)
        for (k, n), d in dims.items():
            assert dims.get((v - 2 * n + k, v - n), 0) == d


def test_sh_representatives_are_cocycles():
    sc = SeifertComplex(dynkin("E", 6))
    for q, e in sc.bidegrees():
        sh = sc.sh(q, e)
        for rep in sh.reps:
            if sc.dim(q + 1, e):
                assert sc.matrix("D", q, e).mul_vec(rep) == 0
            tags, rem = sh.coords(rep)
            assert rem == 0 and len(tags) == 1


def test_empty_forest():
    sc = SeifertComplex(Forest(0))
    assert cohomology_dims(Forest(0)) == {(0, 0): 1}
    assert sc.poincare_polynomial() == BiPolynomial.from_dict({(0, 0): 1})
