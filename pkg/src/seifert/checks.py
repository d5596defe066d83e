"""Invariant suite run by `cmd check` and by the acceptance tests.

Each check returns True/False; run_all collects them in a dict keyed by a
stable name.
"""

from __future__ import annotations

from typing import Dict

from .alexander import (alexander_det, alexander_euler, alexander_matchings,
                        alexander_recursive, monodromy_verified)
from .complexes import (SeifertComplex, apply_D, apply_d, config_count,
                        poincare_polynomial)
from .forest import (Forest, disjoint_union, dynkin, perfect_matching,
                     relabel, remove_vertices)
from .spectral import k2_operator, limit_dim


def check_differentials(sc: SeifertComplex) -> Dict[str, bool]:
    """D^2 = 0, d^2 = 0, Dd = dD and the bigrading contracts, verified
    term by term on every basis configuration."""
    f = sc.forest
    dd = d2 = comm = grading = True
    for q, e in sc.bidegrees():
        for c in sc.basis(q, e):
            terms_D = apply_D(c)
            terms_d = apply_d(f, c)
            grading &= all(t.q == q + 1 and t.e == e for t in terms_D)
            grading &= all(t.q == q + 1 and t.e == e + 1 for t in terms_d)
            dd &= _xor_terms([apply_D(t) for t in terms_D]) == set()
            d2 &= _xor_terms([apply_d(f, t) for t in terms_d]) == set()
            comm &= _xor_terms([apply_d(f, t) for t in terms_D]) == \
                _xor_terms([apply_D(t) for t in terms_d])
    return {"D_squared_zero": dd, "d_squared_zero": d2,
            "differentials_commute": comm, "grading_contract": grading}


def _xor_terms(term_lists) -> set:
    out: set = set()
    for terms in term_lists:
        out ^= set(terms)
    return out


def check_total_dims(sc: SeifertComplex) -> bool:
    total = sum(sc.dim(q, e) for q, e in sc.bidegrees())
    return total == config_count(sc.forest)


def check_duality(sc: SeifertComplex) -> bool:
    """dim SH^k(T, n) = dim SH^{V-2n+k}(T, V-n)."""
    v = sc.vertex_count
    dims = sc.cohomology_dims()
    return all(dims.get((v - 2 * n + k, v - n), 0) == d
               for (k, n), d in dims.items())


def check_euler(sc: SeifertComplex) -> bool:
    euler = sc.poincare_polynomial().substitute_first(-1)
    return euler == alexander_det(sc.forest)


def check_alexander_agreement(f: Forest, with_euler: bool = True) -> bool:
    delta = alexander_det(f)
    ok = alexander_matchings(f) == delta
    ok &= alexander_recursive(f) == delta
    ok &= monodromy_verified(f)[1]
    if with_euler:
        ok &= alexander_euler(f) == delta
    return ok


def check_additivity(sc: SeifertComplex) -> bool:
    """Hanging-vertex dimension count at every degree-1 vertex v with
    neighbor w: dim SC^k(T,n) = dim SC^k(T1,n) + dim SC^{k-1}(T1,n-1)
    + dim SC^k(T2,n-1)."""
    f = sc.forest
    ok = True
    for v in range(f.vertex_count):
        if f.degree(v) != 1:
            continue
        w = f.neighbors(v)[0]
        sc1 = SeifertComplex(remove_vertices(f, [v]))
        sc2 = SeifertComplex(remove_vertices(f, [v, w]))
        for e in range(f.vertex_count + 1):
            for q in range(e + 1):
                expect = sc1.dim(q, e) + sc1.dim(q - 1, e - 1) + \
                    sc2.dim(q, e - 1)
                ok &= sc.dim(q, e) == expect
    return ok


def check_limit(f: Forest, sc: SeifertComplex = None) -> bool:
    """Stabilized spectral-sequence dimension = Delta(1) = perfect-matching
    indicator."""
    lim = limit_dim(f, sc)
    has_pm = perfect_matching(f) is not None
    return lim == alexander_det(f)(1) == (1 if has_pm else 0)


def check_k2_squared(f: Forest, sc: SeifertComplex = None) -> bool:
    m = k2_operator(f, sc).matrix
    return (m @ m).is_zero()


def check_relabel_invariance(f: Forest, sc: SeifertComplex = None) -> bool:
    """Delta and P are unchanged under reversing the vertex labels."""
    p = (sc or SeifertComplex(f)).poincare_polynomial()
    perm = list(range(f.vertex_count))[::-1]
    g = relabel(f, perm)
    return alexander_det(g) == alexander_det(f) and \
        poincare_polynomial(g) == p


def check_union_multiplicativity(f: Forest, sc: SeifertComplex = None) -> bool:
    """P and Delta of f disjoint-union A_1 factor as products."""
    p = (sc or SeifertComplex(f)).poincare_polynomial()
    g = disjoint_union(f, dynkin("A", 1))
    a1 = dynkin("A", 1)
    ok = alexander_det(g) == alexander_det(f) * alexander_det(a1)
    ok &= poincare_polynomial(g) == p * poincare_polynomial(a1)
    return ok


def run_all(f: Forest, heavy: bool = True) -> Dict[str, bool]:
    """Full invariant suite; heavy=False skips the checks that rebuild
    auxiliary complexes (additivity, union multiplicativity)."""
    sc = SeifertComplex(f)
    out = check_differentials(sc)
    out["total_dims_match_config_count"] = check_total_dims(sc)
    out["duality"] = check_duality(sc)
    out["euler_equals_det"] = check_euler(sc)
    out["alexander_four_way"] = check_alexander_agreement(
        f, with_euler=f.vertex_count <= 12)
    out["limit_dim_vs_delta_vs_matching"] = check_limit(f, sc)
    out["k2_squared_zero"] = check_k2_squared(f, sc)
    out["relabel_invariance"] = check_relabel_invariance(f, sc)
    if heavy:
        out["hanging_vertex_additivity"] = check_additivity(sc)
        out["union_multiplicativity"] = check_union_multiplicativity(f, sc)
    return out
