"""Truncated power series in x with exact rational coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .cyclotomic import ResidueSeries, check_odd_prime, check_rbar
from .rootsys import RootSystem, positive_root_pairings

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class TruncSeries:
    """c_0 + c_1 x + ... + c_N x^N, with everything above x^N unknown."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar], order: int) -> TruncSeries:
        c = [Fraction(a) for a in coeffs][: order + 1]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    @classmethod
    def constant(cls, a: Scalar, order: int) -> TruncSeries:
        return cls.from_list([a], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def x_order(self) -> int | None:
        """Index of the first nonzero coefficient; None if all kept terms vanish."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(order, self.coeffs[: order + 1])

    def shift_down(self, k: int) -> TruncSeries:
        """Divide by x^k; the order drops by k."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise ValueError("shift exceeds truncation order")
        return TruncSeries(self.order - k, self.coeffs[k:])

    def _coerce(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> TruncSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = min(self.order, other.order)
        return TruncSeries(N, tuple(self.coeffs[k] + other.coeffs[k] for k in range(N + 1)))

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> TruncSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            if a[i]:
                for j in range(N + 1 - i):
                    out[i + j] += a[i] * b[j]
        return TruncSeries(N, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * series_invert(other)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> TruncSeries:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["order"]), tuple(Fraction(c) for c in data["coeffs"]))


def binomial_series(c: Scalar, order: int) -> TruncSeries:
    """(1 + x)^c = sum_l binom(c, l) x^l."""
    c = Fraction(c)
    out = [Fraction(1)]
    for l in range(1, order + 1):
        out.append(out[-1] * (c - l + 1) / l)
    return TruncSeries(order, tuple(out))


def series_arith(op: str, s: TruncSeries, t: TruncSeries) -> TruncSeries:
    if op == "add":
        return s + t
    if op == "sub":
        return s - t
    if op == "mul":
        return s * t
    raise ValueError(f"unknown operation {op!r}")


def series_invert(s: TruncSeries) -> TruncSeries:
    if s.coeffs[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    a = s.coeffs
    inv0 = 1 / a[0]
    out = [inv0]
    for k in range(1, s.order + 1):
        acc = sum((a[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(-acc * inv0)
    return TruncSeries(s.order, tuple(out))


def series_divide_shifted(num: TruncSeries, den: TruncSeries, k: int) -> TruncSeries:
    """num / den when both vanish to order >= k and den / x^k is a unit.

    The quotient is known to order min(orders) - k.
    """
    return num.shift_down(k) * series_invert(den.shift_down(k))


def psi_series(rs: RootSystem, scale: Scalar, order: int) -> TruncSeries:
    """prod over positive roots of 1 - (1 + x)^{-scale (rho|alpha)}."""
    scale = Fraction(scale)
    result = TruncSeries.constant(1, order)
    for p in positive_root_pairings(rs, rs.rho):
        result = result * (1 - binomial_series(-scale * p, order))
    return result


def series_p_r(s: TruncSeries, r: int, n: int) -> ResidueSeries:
    """Keep x^0..x^rbar and reduce each coefficient mod r."""
    check_odd_prime(r)
    rb = check_rbar(r, n)
    if s.order < rb:
        raise ValueError(f"series order {s.order} is below rbar = {rb}")
    out = []
    for l in range(rb + 1):
        c = s.coeffs[l]
        if c.denominator % r == 0:
            raise ValueError(f"coefficient of x^{l} ({c}) has denominator divisible by {r}")
        out.append(c.numerator * pow(c.denominator, -1, r) % r)
    return ResidueSeries(r, n, rb, tuple(out))
