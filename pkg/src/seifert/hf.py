"""Combinatorial recipe turning the Alexander polynomial of a knot into
graded Poincare polynomials, and the comparison with K2-cohomology.

The series Delta(t)/(1-t) of a knot (Delta(1) = 1) has 0/1 coefficients;
the exponents with coefficient 1 are the gap exponents alpha_0 = 0 <
alpha_1 < ...; they eventually become consecutive.  From them one forms

    P_g      = 1 + q t^a1 + q^2 t^a2 + ...      (q^k -> u^{2k})
    Delta_g  = (1 - q t) P_g                     (telescoped, finite)

with the sign-dependent substitution q^k -> u^{2k}, -q^k -> u^{2k-1} for
the second polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from .forest import Forest
from .poly import BiPolynomial, IntPolynomial


class LinkError(ValueError):
    """Delta(1) != 1: the input is a link, the recipe is undefined."""


class RecipeError(ValueError):
    """Delta does not have the 0/1 partial-sum shape the recipe needs."""


@dataclass(frozen=True)
class GapSequence:
    """Exponents alpha_i with coefficient 1 in Delta/(1-t), listed up to
    deg(Delta); from stable_from on they increase by exactly 1, and the
    series continues with +1 steps forever (certified by Delta(1) = 1)."""

    alpha: Tuple[int, ...]
    stable_from: int

    def exponent(self, i: int) -> int:
        if i < len(self.alpha):
            return self.alpha[i]
        return self.alpha[-1] + (i - len(self.alpha) + 1)


def gap_exponents(delta: IntPolynomial) -> GapSequence:
    if delta(1) != 1:
        raise LinkError("Delta(1) = %d: link, no HF comparison defined"
                        % delta(1))
    partial = 0
    alpha: List[int] = []
    for i in range(delta.degree + 1):
        partial += delta[i]
        if partial not in (0, 1):
            raise RecipeError("partial sum %d at t^%d outside {0, 1}"
                              % (partial, i))
        if partial == 1:
            alpha.append(i)
    # the partial sum at deg(delta) is Delta(1) = 1, so alpha ends at the
    # degree and the series continues with consecutive exponents
    stable_from = len(alpha) - 1
    while stable_from > 0 and alpha[stable_from] == alpha[stable_from - 1] + 1:
        stable_from -= 1
    return GapSequence(tuple(alpha), stable_from)


@dataclass(frozen=True)
class HfMinusSeries:
    """Truncation of the HF-minus Poincare series in (u, t).

    The series continues past the listed terms with steps of +2 in the
    u-exponent and +1 in the t-exponent, starting at tail_next.
    """

    poly: BiPolynomial
    tail_next: Tuple[int, int]


def hf_minus_poly(delta: IntPolynomial) -> HfMinusSeries:
    gaps = gap_exponents(delta)
    terms: Dict[Tuple[int, int], int] = {}
    i = 0
    while gaps.exponent(i) <= max(delta.degree, 0):
        terms[(2 * i, gaps.exponent(i))] = 1
        i += 1
    return HfMinusSeries(BiPolynomial.from_dict(terms),
                         (2 * i, gaps.exponent(i)))


def hf_hat_poly(delta: IntPolynomial) -> BiPolynomial:
    """(1 - qt) P_g telescoped to a finite polynomial, then q^k -> u^{2k}
    on +1 coefficients and q^k -> u^{2k-1} on -1 coefficients."""
    gaps = gap_exponents(delta)
    alpha = gaps.alpha
    # term i of P_g contributes +q^i t^{alpha_i} - q^{i+1} t^{alpha_i + 1};
    # the negative part cancels the next positive one exactly at consecutive
    # exponents, so only the jump positions survive
    jumps = [i for i in range(1, gaps.stable_from + 1)
             if alpha[i] != alpha[i - 1] + 1]
    out: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for i in jumps:
        out[(2 * i, alpha[i])] = 1            # +q^i t^{alpha_i}
        out[(2 * i - 1, alpha[i - 1] + 1)] = 1  # -q^i t^{alpha_{i-1}+1}
    return BiPolynomial.from_dict(out)


@dataclass(frozen=True)
class ComparisonReport:
    forest: Forest
    hf_exponents: Tuple[Tuple[int, int], ...]   # (u-exp, t-exp) sorted
    k2_exponents: Tuple[Tuple[int, int], ...]   # (Q, E) sorted
    match: bool


def compare_report(f: Forest) -> ComparisonReport:
    """Pair hf_hat monomials u^a t^b with K2-cohomology bidegrees (Q, E)
    under a <-> Q, b <-> E; MATCH iff the exponent multisets coincide."""
    from .alexander import alexander_det
    from .spectral import k2_cohomology
    if not f.is_connected():
        raise LinkError("forest is disconnected, comparison not defined")
    delta = alexander_det(f)
    hat = hf_hat_poly(delta)  # raises LinkError when Delta(1) != 1
    hf_exp = tuple(sorted(k for k, _ in hat.terms))
    k2_exp = tuple(sorted(g.bidegree for g in k2_cohomology(f)))
    return ComparisonReport(f, hf_exp, k2_exp, hf_exp == k2_exp)
