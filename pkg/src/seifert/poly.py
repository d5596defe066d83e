"""Exact-integer polynomials in one variable (t) and in two variables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in t, coefficients ascending, trailing zero-free."""

    coeffs: Tuple[int, ...] = ()

    @classmethod
    def from_coeffs(cls, coeffs) -> "IntPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "IntPolynomial":
        if coef == 0:
            return cls()
        return cls(tuple([0] * exp + [coef]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.from_coeffs([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.from_coeffs([self[i] - other[i] for i in range(n)])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.from_coeffs(out)

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            if i > 0 and abs(c) == 1:
                term = mono
            elif i == 0:
                term = str(abs(c))
            else:
                term = "%d*%s" % (abs(c), mono)
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


ONE = IntPolynomial((1,))
ONE_MINUS_T = IntPolynomial((1, -1))


def interpolate(points: List[Tuple[int, int]]) -> IntPolynomial:
    """Exact Lagrange interpolation through integer points; the result must
    have integer coefficients."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for xi, yi in points:
        # basis polynomial prod (t - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = 1
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += c * (-xj)
                new[k + 1] += c
            basis = new
        for k, c in enumerate(basis):
            coeffs[k] += Fraction(yi, denom) * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("non-integer interpolation result")
        out.append(int(c))
    return IntPolynomial.from_coeffs(out)


@dataclass(frozen=True)
class BiPolynomial:
    """Integer polynomial in two variables, e.g. (q, t) or (u, t).

    Terms map (exp_first, exp_t) -> nonzero coefficient.
    """

    terms: Tuple[Tuple[Tuple[int, int], int], ...] = ()

    @classmethod
    def from_dict(cls, d: Dict[Tuple[int, int], int]) -> "BiPolynomial":
        items = tuple(sorted((k, v) for k, v in d.items() if v))
        return cls(items)

    @classmethod
    def monomial(cls, coef: int, a: int, b: int) -> "BiPolynomial":
        return cls.from_dict({(a, b): coef})

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.terms)

    def __add__(self, other: "BiPolynomial") -> "BiPolynomial":
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, 0) + v
        return BiPolynomial.from_dict(d)

    def __sub__(self, other: "BiPolynomial") -> "BiPolynomial":
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d.get(k, 0) - v
        return BiPolynomial.from_dict(d)

    def __mul__(self, other: "BiPolynomial") -> "BiPolynomial":
        d: Dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in other.terms:
                k = (a1 + a2, b1 + b2)
                d[k] = d.get(k, 0) + c1 * c2
        return BiPolynomial.from_dict(d)

    def substitute_first(self, value: int) -> IntPolynomial:
        """Replace the first variable by an integer, leaving t."""
        out: Dict[int, int] = {}
        for (a, b), c in self.terms:
            out[b] = out.get(b, 0) + c * value ** a
        deg = max(out, default=-1)
        return IntPolynomial.from_coeffs([out.get(i, 0) for i in range(deg + 1)])

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self, names: Tuple[str, str] = ("q", "t")) -> str:
        if not self.terms:
            return "0"
        qn, tn = names
        parts = []
        for (a, b), c in self.terms:
            factors = []
            if a:
                factors.append(qn if a == 1 else "%s^%d" % (qn, a))
            if b:
                factors.append(tn if b == 1 else "%s^%d" % (tn, b))
            mono = "*".join(factors)
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = "%d*%s" % (abs(c), mono)
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


BI_ONE = BiPolynomial.from_dict({(0, 0): 1})
