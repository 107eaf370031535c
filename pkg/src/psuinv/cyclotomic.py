"""Exact arithmetic in Z_(r)[zeta] for an odd prime r.

Elements are stored in the basis 1, x, ..., x^{r-2} where x = zeta - 1,
i.e. as residues modulo

    Psi(x) = ((1 + x)^r - 1) / x = sum_j C(r, j+1) x^j,

which is monic of degree r - 1.  Coefficients are kept as an integer
numerator vector over one positive common denominator coprime to r.

In this basis x-adic divisibility is easy to read off: u is divisible by
x = zeta - 1 exactly when its constant coefficient is divisible by r, and
the reduction p_r only looks at the lowest coefficients.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

INFINITY = math.inf

Scalar = Union[int, Fraction]


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    return all(m % p for p in range(3, math.isqrt(m) + 1, 2))


def check_odd_prime(r: int) -> None:
    if not isinstance(r, int) or r < 3 or not is_prime(r):
        raise ValueError(f"modulus must be an odd prime, got {r!r}")


def residue(a: Scalar, r: int) -> int:
    """Natural image in Z/rZ of a rational with denominator prime to r."""
    a = Fraction(a)
    if a.denominator % r == 0:
        raise ValueError(f"{a} has denominator divisible by {r}")
    return a.numerator * pow(a.denominator, -1, r) % r


class _Ring:
    def __init__(self, r: int) -> None:
        self.r = r
        self.dim = r - 1
        # Psi coefficients, x^0 .. x^{r-1}; psi[r-1] == 1
        self.psi = [math.comb(r, j + 1) for j in range(r)]
        # h = (Psi - r) / x, so that r = Psi - x h = -x h in the quotient
        self.h = self.psi[1:]
        self.zeta_table = [self._reduce(_binomial_row(k)) for k in range(r)]

    def _reduce(self, c: Sequence[int]) -> list[int]:
        c = list(c)
        d = self.dim
        psi = self.psi
        for top in range(len(c) - 1, d - 1, -1):
            t = c[top]
            if t:
                off = top - d
                for j in range(d):
                    c[off + j] -= t * psi[j]
                c[top] = 0
        c = c[:d]
        c.extend([0] * (d - len(c)))
        return c


def _binomial_row(k: int) -> list[int]:
    return [math.comb(k, j) for j in range(k + 1)]


@lru_cache(maxsize=None)
def ring(r: int) -> _Ring:
    check_odd_prime(r)
    return _Ring(r)


class CycloNumber:
    """Element of Z_(r)[zeta], canonical in the (zeta - 1)-power basis."""

    __slots__ = ("r", "nums", "den")

    def __init__(self, r: int, coeffs: Iterable[Scalar] = ()) -> None:
        R = ring(r)
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        if len(nums) > R.dim:
            nums = R._reduce(nums)
        nums.extend([0] * (R.dim - len(nums)))
        self._set(r, nums, den)

    def _set(self, r: int, nums: Sequence[int], den: int) -> None:
        g = den
        for a in nums:
            if g == 1:
                break
            g = math.gcd(g, a)
        if g != 1:
            nums = [a // g for a in nums]
            den //= g
        if den % r == 0:
            raise ValueError(f"coefficient denominator {den} is divisible by r = {r}")
        self.r = r
        self.nums = tuple(nums)
        self.den = den

    @classmethod
    def _raw(cls, r: int, nums: Sequence[int], den: int = 1) -> CycloNumber:
        obj = cls.__new__(cls)
        obj._set(r, nums, den)
        return obj

    # constructors

    @classmethod
    def zero(cls, r: int) -> CycloNumber:
        return cls._raw(r, [0] * (r - 1))

    @classmethod
    def one(cls, r: int) -> CycloNumber:
        return cls.from_scalar(r, 1)

    @classmethod
    def from_scalar(cls, r: int, a: Scalar) -> CycloNumber:
        a = Fraction(a)
        nums = [0] * ring(r).dim
        nums[0] = a.numerator
        return cls._raw(r, nums, a.denominator)

    @classmethod
    def xi(cls, r: int) -> CycloNumber:
        """x = zeta - 1."""
        return cls(r, [0, 1])

    @classmethod
    def zeta(cls, r: int, k: int = 1) -> CycloNumber:
        return cls._raw(r, ring(r).zeta_table[k % r])

    @classmethod
    def from_q_counts(cls, r: int, counts: Mapping[int, Scalar] | Sequence[Scalar]) -> CycloNumber:
        """sum_k c_k zeta^k, exponents taken mod r."""
        R = ring(r)
        items = counts.items() if isinstance(counts, Mapping) else enumerate(counts)
        folded = [Fraction(0)] * r
        for k, c in items:
            folded[k % r] += c
        den = 1
        for c in folded:
            den = den * c.denominator // math.gcd(den, c.denominator)
        acc = [0] * R.dim
        for k, c in enumerate(folded):
            if c:
                a = int(c * den)
                row = R.zeta_table[k]
                for j in range(R.dim):
                    acc[j] += a * row[j]
        return cls._raw(r, acc, den)

    # views

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_integral(self) -> bool:
        """All canonical coefficients are rational integers."""
        return self.den == 1

    def __repr__(self) -> str:
        terms = [str(c) if j == 0 else f"({c})*x^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"CycloNumber(r={self.r}, {' + '.join(terms) or '0'})"

    # ring operations

    def _coerce(self, other) -> CycloNumber:
        if isinstance(other, CycloNumber):
            if other.r != self.r:
                raise ValueError(f"modulus mismatch: {self.r} vs {other.r}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_scalar(self.r, other)
        return NotImplemented

    def __add__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        den = d1 * d2 // math.gcd(d1, d2)
        m1, m2 = den // d1, den // d2
        return CycloNumber._raw(self.r, [a * m1 + b * m2 for a, b in zip(self.nums, other.nums)], den)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber._raw(self.r, [-a for a in self.nums], self.den)

    def __sub__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> CycloNumber:
        return (-self) + other

    def __mul__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = ring(self.r)
        a, b = self.nums, other.nums
        prod = [0] * (2 * R.dim - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloNumber._raw(self.r, R._reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycloNumber:
        if k < 0:
            return cyclo_invert(self) ** (-k)
        result = CycloNumber.one(self.r)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyclo_exact_div(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_scalar(self.r, other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.r == other.r and self.den == other.den and self.nums == other.nums

    def __hash__(self) -> int:
        return hash((self.r, self.nums, self.den))

    # serialization

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> CycloNumber:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["r"]), [Fraction(c) for c in data["coeffs"]])


def cyclo_arith(op: str, u: CycloNumber, v: CycloNumber) -> CycloNumber:
    if u.r != v.r:
        raise ValueError(f"modulus mismatch: {u.r} vs {v.r}")
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown operation {op!r}")


def zeta_power(r: int, a: Scalar) -> CycloNumber:
    """zeta^{a^vee}, where a^vee is the image of the rational a in Z/rZ."""
    check_odd_prime(r)
    return CycloNumber.zeta(r, residue(a, r))


def _shift_once(nums: list[int], h: Sequence[int], r: int) -> list[int]:
    # u = c0 + x g with r | c0; r = -x h in the quotient, so u = x (g - (c0/r) h)
    c = nums[0] // r
    out = [nums[j + 1] - c * h[j] for j in range(len(nums) - 1)]
    out.append(-c * h[len(nums) - 1])
    return out


def xi_valuation(u: CycloNumber) -> int | float:
    """Largest k with u in (zeta - 1)^k Z_(r)[zeta]; INFINITY for zero."""
    if u.is_zero():
        return INFINITY
    R = ring(u.r)
    nums = list(u.nums)
    k = 0
    while nums[0] % u.r == 0:
        nums = _shift_once(nums, R.h, u.r)
        k += 1
    return k


def xi_shift(u: CycloNumber, k: int) -> CycloNumber:
    """Exact quotient u / (zeta - 1)^k."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    R = ring(u.r)
    nums = list(u.nums)
    for _ in range(k):
        if nums[0] % u.r:
            raise ValueError(f"valuation of {u!r} is below {k}")
        nums = _shift_once(nums, R.h, u.r)
    return CycloNumber._raw(u.r, nums, u.den)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        t = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = t
        for j, bj in enumerate(b):
            a[shift + j] -= t * bj
        a.pop()
        _poly_trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim([Fraction(c) for c in out])


def cyclo_invert(u: CycloNumber) -> CycloNumber:
    """Inverse of a unit of Z_(r)[zeta] via the extended Euclidean algorithm."""
    if u.is_zero() or u.nums[0] % u.r == 0:
        raise ValueError(f"{u!r} is not a unit (it is divisible by zeta - 1)")
    R = ring(u.r)
    # s * u == g (mod Psi) invariant along the remainder sequence
    r0 = [Fraction(c) for c in R.psi]
    r1 = _poly_trim([Fraction(c) for c in u.nums])
    s0: list[Fraction] = []
    s1 = [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ValueError("element shares a factor with Psi; not invertible")
    c = r1[0]
    inv = CycloNumber(u.r, [a / c * u.den for a in s1])
    if inv * u != CycloNumber.one(u.r):
        raise ArithmeticError("inversion check failed")
    return inv


def cyclo_exact_div(u: CycloNumber, v: CycloNumber) -> CycloNumber:
    """Return w with w * v == u, failing loudly if v does not divide u."""
    if u.r != v.r:
        raise ValueError(f"modulus mismatch: {u.r} vs {v.r}")
    if v.is_zero():
        raise ZeroDivisionError("division by zero in Z_(r)[zeta]")
    if u.is_zero():
        return CycloNumber.zero(u.r)
    k = xi_valuation(v)
    if xi_valuation(u) < k:
        raise ValueError(f"valuation deficit: cannot divide {u!r} by {v!r}")
    w = xi_shift(u, k) * cyclo_invert(xi_shift(v, k))
    if w * v != u:
        raise ArithmeticError("exact division check failed")
    return w


@dataclass(frozen=True)
class ResidueSeries:
    """Polynomial of degree <= rbar over Z/rZ: the image of p_r."""

    r: int
    n: int
    rbar: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rbar < 0:
            raise ValueError(f"rbar = {self.rbar} < 0 (need r > n(n-1))")
        if len(self.coeffs) != self.rbar + 1:
            raise ValueError("residue series length must be rbar + 1")
        object.__setattr__(self, "coeffs", tuple(int(c) % self.r for c in self.coeffs))

    def _check(self, other: ResidueSeries) -> None:
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("residue series over different (r, n)")

    def __add__(self, other: ResidueSeries) -> ResidueSeries:
        self._check(other)
        return ResidueSeries(self.r, self.n, self.rbar, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: ResidueSeries) -> ResidueSeries:
        self._check(other)
        out = [0] * (self.rbar + 1)
        for i, a in enumerate(self.coeffs):
            for j in range(self.rbar + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return ResidueSeries(self.r, self.n, self.rbar, tuple(out))

    def to_json(self) -> dict:
        return {"r": self.r, "rbar": self.rbar, "coeffs": list(self.coeffs)}


def rbar(r: int, n: int) -> int:
    """(r - 1 - n(n-1)) / 2."""
    return (r - 1 - n * (n - 1)) // 2


def check_rbar(r: int, n: int) -> int:
    if r <= n * (n - 1):
        raise ValueError(f"p_r needs r > n(n-1); got r={r}, n={n}")
    return rbar(r, n)


def reduce_p_r(u: CycloNumber, n: int) -> ResidueSeries:
    """Keep x^0..x^rbar of the canonical representative and reduce mod r."""
    r = u.r
    rb = check_rbar(r, n)
    inv = pow(u.den, -1, r)
    return ResidueSeries(r, n, rb, tuple(a * inv % r for a in u.nums[: rb + 1]))
