"""Quadratic Gauss sums and Gauss sums over the root lattice of sl_n.

All closed forms are stated inside Z[zeta]: the phase e^{pi i (1-r)/4} sqrt(r)
of the classical evaluation equals (2/r) * gamma, where gamma is the
quadratic Gauss sum sum_k zeta^{k^2}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycloNumber, check_odd_prime, residue, zeta_power
from .rootsys import (
    DEFAULT_CAP,
    RootSystem,
    Weight,
    check_box_size,
    diagonalization,
    enumerate_box,
    in_root_lattice,
    norm2,
    scaled_inner,
)


@dataclass(frozen=True)
class GaussContext:
    rs: RootSystem
    r: int
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        check_odd_prime(self.r)
        if self.r <= self.rs.n:
            raise ValueError(f"need r > n, got r={self.r}, n={self.rs.n}")
        check_box_size(self.rs, self.r, self.cap)

    @property
    def n(self) -> int:
        return self.rs.n


def _check_b(b: int, r: int) -> None:
    if b % r == 0:
        raise ValueError(f"framing/multiplier {b} is divisible by r = {r}")


def legendre_symbol(b: int, r: int) -> int:
    """Euler's criterion: b^{(r-1)/2} mod r as +1 or -1."""
    check_odd_prime(r)
    _check_b(b, r)
    return 1 if pow(b, (r - 1) // 2, r) == 1 else -1


def quadratic_gauss(r: int) -> CycloNumber:
    """gamma = sum_{k mod r} zeta^{k^2}."""
    return twisted_quadratic_gauss(r, 1)


def twisted_quadratic_gauss(r: int, b: int) -> CycloNumber:
    """sum_{k mod r} zeta^{b k^2}, evaluated term by term."""
    check_odd_prime(r)
    _check_b(b, r)
    counts = [0] * r
    for k in range(r):
        counts[b * k * k % r] += 1
    return CycloNumber.from_q_counts(r, counts)


def shifted_half_norm(rs: RootSystem, mu: Weight) -> int:
    """(|mu|^2 - |rho|^2) / 2, which must be an integer on rho + root lattice."""
    num = scaled_inner(rs, mu, mu) - scaled_inner(rs, rs.rho, rs.rho)
    q, rem = divmod(num, 2 * rs.n)
    if rem:
        raise ArithmeticError(f"(|mu|^2 - |rho|^2)/2 is not an integer for mu = {mu.coords}")
    return q


@lru_cache(maxsize=64)
def box_exponents(ctx: GaussContext) -> tuple[tuple[Weight, int], ...]:
    """Each box point with its exponent (|mu|^2 - |rho|^2)/2 reduced mod r."""
    r = ctx.r
    return tuple((mu, shifted_half_norm(ctx.rs, mu) % r) for mu in enumerate_box(ctx.rs, r, ctx.cap))


def root_gauss_brute(ctx: GaussContext, b: int) -> CycloNumber:
    """G(b) = sum over the box of zeta^{b (|mu|^2 - |rho|^2)/2}."""
    _check_b(b, ctx.r)
    r = ctx.r
    counts = [0] * r
    for _, e in box_exponents(ctx):
        counts[b * e % r] += 1
    return CycloNumber.from_q_counts(r, counts)


def _root_lattice_weight(ctx: GaussContext, beta: Weight) -> None:
    if not in_root_lattice(ctx.rs, beta):
        raise ValueError(f"{beta.coords} is not in the root lattice")


@lru_cache(maxsize=512)
def translated_exponents(ctx: GaussContext, beta: Weight) -> tuple[int, ...]:
    """(|mu + beta|^2 - |rho|^2)/2 mod r for each box point mu."""
    _root_lattice_weight(ctx, beta)
    return tuple(shifted_half_norm(ctx.rs, mu + beta) % ctx.r for mu, _ in box_exponents(ctx))


def root_gauss_translated(ctx: GaussContext, b: int, beta: Weight) -> CycloNumber:
    """sum over the box of zeta^{b (|mu + beta|^2 - |rho|^2)/2}."""
    _check_b(b, ctx.r)
    r = ctx.r
    counts = [0] * r
    for e in translated_exponents(ctx, beta):
        counts[b * e % r] += 1
    return CycloNumber.from_q_counts(r, counts)


def root_gauss_closed(ctx: GaussContext, b: int) -> CycloNumber:
    """(n/r) [(b/r)(2/r) gamma]^{n-1} zeta^{(-b|rho|^2/2)^vee}."""
    return multivar_gauss_closed(ctx, b) * zeta_power(ctx.r, -b * ctx.rs.rho_norm2 / 2)


def multivar_gauss_closed(ctx: GaussContext, b: int) -> CycloNumber:
    """(n/r) [(b/r)(2/r) gamma]^{n-1}."""
    _check_b(b, ctx.r)
    r, n = ctx.r, ctx.n
    unit = legendre_symbol(b, r) * legendre_symbol(2, r)
    return legendre_symbol(n, r) * (unit * quadratic_gauss(r)) ** (n - 1)


def gauss_ratio_closed(ctx: GaussContext, b: int) -> CycloNumber:
    """(|b|/r)^{n-1} zeta^{((sn(b) - b)|rho|^2/2)^vee}, the value of G(b)/G(sn(b))."""
    _check_b(b, ctx.r)
    sn = 1 if b > 0 else -1
    sign = legendre_symbol(abs(b), ctx.r) ** (ctx.n - 1)
    return sign * zeta_power(ctx.r, (sn - b) * ctx.rs.rho_norm2 / 2)


def multivar_gauss_brute(ctx: GaussContext, b: int) -> CycloNumber:
    """sum over k in (Z/r)^{n-1} of zeta^{b k^t A k / 2}."""
    _check_b(b, ctx.r)
    r, m = ctx.r, ctx.rs.rank
    A = ctx.rs.cartan
    counts = [0] * r
    for k in itertools.product(range(r), repeat=m):
        q = sum(k[i] * A[i][j] * k[j] for i in range(m) for j in range(m))
        counts[b * (q // 2) % r] += 1
    return CycloNumber.from_q_counts(r, counts)


def multivar_gauss_diagonal(ctx: GaussContext, b: int) -> CycloNumber:
    """Product of one-variable Gauss sums after writing A/2 = P^t D P.

    P is unit triangular with entries invertible mod r, so k -> P k permutes
    (Z/r)^{n-1} and the sum splits as prod_j sum_y zeta^{(b D_jj)^vee y^2}.
    """
    _check_b(b, ctx.r)
    _, D = diagonalization(ctx.n)
    result = CycloNumber.one(ctx.r)
    for d in D:
        result = result * twisted_quadratic_gauss(ctx.r, residue(b * d, ctx.r))
    return result


@lru_cache(maxsize=512)
def _pairing_exponents(ctx: GaussContext, beta: Weight) -> tuple[tuple[int, int], ...]:
    _root_lattice_weight(ctx, beta)
    n = ctx.n
    out = []
    for mu, e in box_exponents(ctx):
        s = scaled_inner(ctx.rs, mu, beta)
        if s % n:
            raise ArithmeticError("(mu|beta) is not an integer")
        out.append((e, s // n))
    return tuple(out)


def completed_square_sum(ctx: GaussContext, b: int, beta: Weight) -> CycloNumber:
    """sum over the box of zeta^{b (|mu|^2 - |rho|^2)/2} zeta^{(mu|beta)}."""
    _check_b(b, ctx.r)
    r = ctx.r
    counts = [0] * r
    for e, s in _pairing_exponents(ctx, beta):
        counts[(b * e + s) % r] += 1
    return CycloNumber.from_q_counts(r, counts)


def complete_square_check(ctx: GaussContext, b: int, beta: Weight) -> tuple[bool, dict]:
    """Compare the twisted box sum with zeta^{(-|beta|^2/2b)^vee} G(b).

    Returns (ok, payload); the payload carries both sides.
    """
    lhs = completed_square_sum(ctx, b, beta)
    rhs = zeta_power(ctx.r, -norm2(ctx.rs, beta) / (2 * b)) * root_gauss_brute(ctx, b)
    return lhs == rhs, {"lhs": lhs, "rhs": rhs}
