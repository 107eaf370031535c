"""Bernoulli polynomials, power sums and alternating binomial sums."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .cyclotomic import CycloNumber, xi_valuation

MAX_BERNOULLI_DEGREE = 64


@lru_cache(maxsize=None)
def bernoulli_numbers(m: int) -> tuple[Fraction, ...]:
    """B_0..B_m with B_1 = -1/2, from sum_{k<=j} C(j+1, k) B_k = 0."""
    B = [Fraction(1)]
    for j in range(1, m + 1):
        acc = sum((math.comb(j + 1, k) * B[k] for k in range(j)), Fraction(0))
        B.append(-acc / (j + 1))
    return tuple(B)


@dataclass(frozen=True)
class BernoulliPoly:
    degree: int
    coeffs: tuple[Fraction, ...]  # coeffs[k] multiplies z^k

    def __call__(self, z) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


def bernoulli_polynomial(d: int) -> BernoulliPoly:
    """B_d(z) = sum_k C(d, k) B_k z^{d-k}."""
    if not 0 <= d <= MAX_BERNOULLI_DEGREE:
        raise ValueError(f"degree must lie in [0, {MAX_BERNOULLI_DEGREE}], got {d}")
    B = bernoulli_numbers(d)
    coeffs = [Fraction(0)] * (d + 1)
    for k in range(d + 1):
        coeffs[d - k] = math.comb(d, k) * B[k]
    return BernoulliPoly(d, tuple(coeffs))


def power_sum(r: int, d: int) -> int:
    """sum_{k=0}^{r-1} k^d, with 0^0 = 1."""
    return sum(k**d for k in range(r))


def power_sum_bernoulli(r: int, d: int) -> Fraction:
    """(B_{d+1}(r) - B_{d+1}(0)) / (d + 1)."""
    B = bernoulli_polynomial(d + 1)
    return (B(r) - B(0)) / (d + 1)


def binom_column_sum(r: int, d: int) -> int:
    """sum_{k=0}^{r-1} C(k, d)."""
    return sum(math.comb(k, d) for k in range(r))


def binom_column_bound(r: int, d: int) -> int:
    return max(0, (r - 1) // 2 - d // 2)


def binom_column_sum_valuation(r: int, d: int) -> tuple[bool, dict]:
    """Check that sum_{k<r} C(k, d), as an element of Z_(r)[zeta], has
    (zeta-1)-adic valuation at least max(0, (r-1)/2 - floor(d/2))."""
    value = binom_column_sum(r, d)
    v = xi_valuation(CycloNumber.from_scalar(r, value))
    bound = binom_column_bound(r, d)
    return v >= bound, {"sum": value, "valuation": v, "bound": bound}


Polynomial = Mapping[tuple[int, ...], Fraction]


def poly_degree(p: Polynomial) -> int:
    degs = [sum(e) for e, c in p.items() if c]
    return max(degs) if degs else -1


def poly_eval(p: Polynomial, point: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for exps, c in p.items():
        total += c * math.prod(x**e for x, e in zip(point, exps))
    return total


def alternating_binomial_sum(a: Sequence[int], p: Polynomial) -> Fraction:
    """sum_{0 <= s <= a} (-1)^{|s|} C(a, s) p(s)."""
    total = Fraction(0)
    for s in itertools.product(*(range(ai + 1) for ai in a)):
        coeff = math.prod(math.comb(ai, si) for ai, si in zip(a, s))
        total += (-1) ** sum(s) * coeff * poly_eval(p, s)
    return total


def binom_vanishing_check(a: Sequence[int], p: Polynomial) -> tuple[bool, dict]:
    """The alternating binomial sum of p over 0 <= s <= a vanishes when deg p < |a|."""
    if poly_degree(p) >= sum(a):
        raise ValueError(f"polynomial degree {poly_degree(p)} is not below |a| = {sum(a)}")
    value = alternating_binomial_sum(a, p)
    return value == 0, {"value": value}


# integer-valued polynomials in the binomial basis


BinomialPoly = Mapping[tuple[int, ...], int]


def binomial_poly_degree(p: BinomialPoly) -> int:
    degs = [sum(l) for l, c in p.items() if c]
    return max(degs) if degs else -1


def binomial_poly_eval(p: BinomialPoly, point: Sequence[int]) -> int:
    """Evaluate sum c_l prod_i C(t_i, l_i) at an integer point of non-negative coordinates."""
    return sum(c * math.prod(math.comb(t, l) for t, l in zip(point, ls)) for ls, c in p.items())


def box_binomial_sum(r: int, p: BinomialPoly, m: int) -> int:
    """sum of p over the box (Z/r)^m, represented by 0..r-1 in each coordinate."""
    return sum(binomial_poly_eval(p, t) for t in itertools.product(range(r), repeat=m))


def box_binomial_sum_check(r: int, p: BinomialPoly, m: int) -> tuple[bool, dict]:
    """Valuation of the box sum is at least m(r-1)/2 - floor(deg p / 2)."""
    value = box_binomial_sum(r, p, m)
    v = xi_valuation(CycloNumber.from_scalar(r, value))
    bound = m * (r - 1) // 2 - binomial_poly_degree(p) // 2
    return v >= bound, {"sum": value, "valuation": v, "bound": bound}
