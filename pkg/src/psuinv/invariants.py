"""Quantum PSU(n) invariants of lens spaces and their connected sums.

A framed unlink with framings b_1..b_m presents the connected sum of lens
spaces M(b_1) # ... # M(b_m).  Because Q factorises over the components of an
unlink, both the exact invariant tau_r and the power series tau are products
of one-component factors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .characters import CharacterContext, psi_counts, psi_rho, unknot_Q_counts
from .cyclotomic import CycloNumber, ResidueSeries, check_rbar, reduce_p_r, xi_valuation, zeta_power
from .gauss import GaussContext, legendre_symbol, root_gauss_brute, shifted_half_norm
from .rootsys import RootSystem, enumerate_alcove, enumerate_box, positive_root_pairings, root_norm2
from .series import TruncSeries, binomial_series, psi_series, series_divide_shifted, series_p_r


def _sign(b: int) -> int:
    return 1 if b > 0 else -1


@dataclass(frozen=True)
class SurgeryPresentation:
    """Framed unlink with nonzero framings."""

    framings: tuple[int, ...]

    def __post_init__(self) -> None:
        framings = tuple(int(b) for b in self.framings)
        if not framings:
            raise ValueError("a surgery presentation needs at least one component")
        if any(b == 0 for b in framings):
            raise ValueError("framings must be nonzero")
        object.__setattr__(self, "framings", framings)

    @property
    def h1_order(self) -> int:
        return math.prod(abs(b) for b in self.framings)

    @property
    def sigma_plus(self) -> int:
        return sum(1 for b in self.framings if b > 0)

    @property
    def sigma_minus(self) -> int:
        return sum(1 for b in self.framings if b < 0)


@dataclass(frozen=True)
class EtaMonomial:
    """eta_1^{a_1} ... eta_{n-1}^{a_{n-1}} with eta_i = 1 - q^{-alpha_i}."""

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.a)
        if any(x < 0 for x in a):
            raise ValueError("eta exponents must be non-negative")
        object.__setattr__(self, "a", a)

    @property
    def degree(self) -> int:
        return sum(self.a)


def gauss_context(ctx: CharacterContext) -> GaussContext:
    return GaussContext(ctx.rs, ctx.r, ctx.cap)


def _check_framing(b: int, r: int) -> None:
    if b == 0 or b % r == 0:
        raise ValueError(f"framing {b} must be nonzero and prime to r = {r}")


# F_{U_b}


@lru_cache(maxsize=256)
def F_unknot_brute(ctx: CharacterContext, b: int) -> CycloNumber:
    """Sum of Q_U(mu) with framing b over the box rho + root lattice mod r."""
    counts = [0] * ctx.r
    for mu in enumerate_box(ctx.rs, ctx.r, ctx.cap):
        for k, c in enumerate(unknot_Q_counts(ctx, mu, b)):
            counts[k] += c
    return CycloNumber.from_q_counts(ctx.r, counts) / psi_rho(ctx, 2)


def F_unknot_closed(ctx: CharacterContext, b: int) -> CycloNumber:
    """n! G(b) psi(b* rho) / (psi(rho) psi(-rho)), with b b* = 1 mod r."""
    _check_framing(b, ctx.r)
    r, rs = ctx.r, ctx.rs
    b_star = pow(b, -1, r)
    pairings = positive_root_pairings(rs, rs.rho)
    num = CycloNumber.from_q_counts(r, psi_counts([b_star * p for p in pairings], r))
    den = psi_rho(ctx) * CycloNumber.from_q_counts(r, psi_counts([-p for p in pairings], r))
    return math.factorial(ctx.n) * root_gauss_brute(gauss_context(ctx), b) * num / den


def F_alcove(ctx: CharacterContext, b: int) -> CycloNumber:
    """Sum of Q_U(mu) with framing b over the points of the fundamental alcove."""
    counts = [0] * ctx.r
    for mu in enumerate_alcove(ctx.rs, ctx.r):
        for k, c in enumerate(unknot_Q_counts(ctx, mu, b)):
            counts[k] += c
    return CycloNumber.from_q_counts(ctx.r, counts) / psi_rho(ctx, 2)


def F_unknot_valuation(n: int, r: int) -> int:
    """(n-1)(r-n-1)/2."""
    return (n - 1) * (r - n - 1) // 2


# tau_r


def _check_surgery(ctx: CharacterContext, pres: SurgeryPresentation) -> None:
    n, r = ctx.n, ctx.r
    if r <= n * (n - 1):
        raise ValueError(f"need r > n(n-1), got r={r}, n={n}")
    if pres.h1_order % r == 0:
        raise ValueError(f"r = {r} divides |H_1| = {pres.h1_order}")


def tau_r_lens_brute(ctx: CharacterContext, b: int) -> CycloNumber:
    """F_{U_b} / F_{U_sn(b)} from the box sums."""
    _check_framing(b, ctx.r)
    return F_unknot_brute(ctx, b) / F_unknot_brute(ctx, _sign(b))


def tau_r_surgery(ctx: CharacterContext, pres: SurgeryPresentation) -> CycloNumber:
    """tau_r of the manifold obtained by surgery on a framed unlink."""
    _check_surgery(ctx, pres)
    result = CycloNumber.one(ctx.r)
    for b in pres.framings:
        result = result * tau_r_lens_brute(ctx, b)
    return result


def tau_r_lens_closed(ctx: CharacterContext, b: int) -> CycloNumber:
    """(|b|/r)^{n-1} zeta^{((sn(b)-b)|rho|^2/2)^vee} psi(b* rho) / psi(sn(b) rho)."""
    _check_framing(b, ctx.r)
    if abs(b) >= ctx.r:
        raise ValueError(f"need |b| < r, got b={b}, r={ctx.r}")
    r, rs, n = ctx.r, ctx.rs, ctx.n
    sn = _sign(b)
    b_star = pow(b, -1, r)
    pairings = positive_root_pairings(rs, rs.rho)
    num = CycloNumber.from_q_counts(r, psi_counts([b_star * p for p in pairings], r))
    den = CycloNumber.from_q_counts(r, psi_counts([sn * p for p in pairings], r))
    factor = legendre_symbol(abs(b), r) ** (n - 1) * zeta_power(r, (sn - b) * rs.rho_norm2 / 2)
    return factor * num / den


# perturbative series


def _lens_series(rs: RootSystem, r: int, b: int, order: int) -> TruncSeries:
    n = rs.n
    N = rs.num_positive_roots
    sn = _sign(b)
    num = psi_series(rs, Fraction(1, b), order + N)
    den = psi_series(rs, sn, order + N)
    ratio = series_divide_shifted(num, den, N)
    twist = binomial_series((sn - b) * rs.rho_norm2 / 2, order)
    return legendre_symbol(abs(b), r) ** (n - 1) * twist * ratio


def tau_series_surgery(ctx: CharacterContext, pres: SurgeryPresentation, order: int) -> TruncSeries:
    """Product over components of the lens-space series, truncated at x^order."""
    for b in pres.framings:
        _check_framing(b, ctx.r)
    result = TruncSeries.constant(1, order)
    for b in pres.framings:
        result = result * _lens_series(ctx.rs, ctx.r, b, order)
    return result


def series_constant_term(ctx: CharacterContext, pres: SurgeryPresentation) -> Fraction:
    """(|H_1|/r)^{n-1} |H_1|^{-n(n-1)/2}."""
    h = pres.h1_order
    return legendre_symbol(h, ctx.r) ** (ctx.n - 1) * Fraction(1, h ** ctx.rs.num_positive_roots)


# eta monomials, Gamma_b and g_b


def _check_eta(rs: RootSystem, a: EtaMonomial) -> None:
    if len(a.a) != rs.rank:
        raise ValueError(f"eta monomial needs {rs.rank} exponents, got {len(a.a)}")


def _eta_counts(a: EtaMonomial, mu, r: int, shift: int = 0) -> list[int]:
    pairings = [k for k, ai in zip(mu.coords, a.a) for _ in range(ai)]
    return psi_counts(pairings, r, shift=shift)


def eta_at_weight(ctx: CharacterContext, a: EtaMonomial, mu) -> CycloNumber:
    """prod_i (1 - zeta^{-(alpha_i|mu)})^{a_i}."""
    _check_eta(ctx.rs, a)
    return CycloNumber.from_q_counts(ctx.r, _eta_counts(a, mu, ctx.r))


def y_series(ctx: CharacterContext, b: int, order: int) -> TruncSeries:
    """(1/n!) (|b|/r)^{n-1} (1+x)^{(sn(b)-b)|rho|^2/2} psi(-sn(b) rho; 1+x)."""
    _check_framing(b, ctx.r)
    rs, n = ctx.rs, ctx.n
    sn = _sign(b)
    scale = Fraction(legendre_symbol(abs(b), ctx.r) ** (n - 1), math.factorial(n))
    twist = binomial_series((sn - b) * rs.rho_norm2 / 2, order)
    return scale * twist * psi_series(rs, -sn, order)


def gamma_transform(ctx: CharacterContext, a: EtaMonomial, b: int, order: int) -> TruncSeries:
    """Gamma_b(eta^a): expand eta^a into q^beta and send q^beta to (1+x)^{-|beta|^2/2b} y_b."""
    _check_eta(ctx.rs, a)
    rs = ctx.rs
    total = TruncSeries.constant(0, order)
    ranges = [range(ai + 1) for ai in a.a]
    for s in itertools.product(*ranges):
        coeff = math.prod(math.comb(ai, si) for ai, si in zip(a.a, s))
        if (a.degree - sum(s)) % 2:
            coeff = -coeff
        beta = [si - ai for si, ai in zip(s, a.a)]
        total = total + coeff * binomial_series(Fraction(-root_norm2(rs, beta), 2 * b), order)
    return total * y_series(ctx, b, order)


def gamma_order_bound(n: int, a: EtaMonomial) -> int:
    """floor((n(n-1) + |a| + 1)/2)."""
    return (n * (n - 1) + a.degree + 1) // 2


def eta_gauss_sum(ctx: CharacterContext, a: EtaMonomial, b: int) -> CycloNumber:
    """sum over the box of zeta^{b(|mu|^2-|rho|^2)/2} eta^a(mu)."""
    _check_eta(ctx.rs, a)
    _check_framing(b, ctx.r)
    r = ctx.r
    counts = [0] * r
    for mu in enumerate_box(ctx.rs, r, ctx.cap):
        for k, c in enumerate(_eta_counts(a, mu, r, shift=b * shifted_half_norm(ctx.rs, mu))):
            counts[k] += c
    return CycloNumber.from_q_counts(r, counts)


def g_b_bruteform(ctx: CharacterContext, a: EtaMonomial, b: int) -> CycloNumber:
    """eta_gauss_sum(a, b) / F_{U_sn(b)}, an exact division."""
    return eta_gauss_sum(ctx, a, b) / F_unknot_brute(ctx, _sign(b))


def binomial_gauss_sum(ctx: CharacterContext, a: EtaMonomial, b: int) -> CycloNumber:
    """sum over the box of zeta^{b(|mu|^2-|rho|^2)/2} prod_i binom((alpha_i|mu), a_i)."""
    _check_eta(ctx.rs, a)
    _check_framing(b, ctx.r)
    r = ctx.r
    counts = [0] * r
    for mu in enumerate_box(ctx.rs, r, ctx.cap):
        weight = math.prod(generalized_binomial(k, ai) for k, ai in zip(mu.coords, a.a))
        counts[b * shifted_half_norm(ctx.rs, mu) % r] += weight
    return CycloNumber.from_q_counts(r, counts)


def generalized_binomial(t: int, k: int) -> int:
    """t (t-1) ... (t-k+1) / k!, an integer for every integer t."""
    num = 1
    for j in range(k):
        num *= t - j
    return num // math.factorial(k)


def binomial_sum_bound(n: int, r: int, a: EtaMonomial) -> int:
    """(n-1)(r-1)/2 - floor(|a|/2)."""
    return (n - 1) * (r - 1) // 2 - a.degree // 2


def binomial_sum_check(ctx: CharacterContext, a: EtaMonomial, b: int) -> tuple[bool, dict]:
    value = binomial_gauss_sum(ctx, a, b)
    v = xi_valuation(value)
    bound = binomial_sum_bound(ctx.n, ctx.r, a)
    return v >= bound, {"valuation": v, "bound": bound}


# the congruence


def congruence_check(
    ctx: CharacterContext, pres: SurgeryPresentation, order: int | None = None
) -> tuple[bool, dict]:
    """Compare p_r(tau_r) with p_r(tau) on all rbar + 1 residues."""
    _check_surgery(ctx, pres)
    rb = check_rbar(ctx.r, ctx.n)
    order = rb if order is None else order
    if order < rb:
        raise ValueError(f"series order {order} is below rbar = {rb}")
    lhs: ResidueSeries = reduce_p_r(tau_r_surgery(ctx, pres), ctx.n)
    rhs: ResidueSeries = series_p_r(tau_series_surgery(ctx, pres, order), ctx.r, ctx.n)
    ok = lhs.coeffs == rhs.coeffs
    report = {
        "n": ctx.n,
        "r": ctx.r,
        "framings": list(pres.framings),
        "rbar": rb,
        "lhs": list(lhs.coeffs),
        "rhs": list(rhs.coeffs),
        "pass": ok,
    }
    return ok, report


def framings_from_list(framings: Sequence[int]) -> SurgeryPresentation:
    return SurgeryPresentation(tuple(framings))
