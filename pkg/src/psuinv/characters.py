"""Weyl denominators and unknot invariants evaluated at zeta = e^{2 pi i / r}.

Everything here is accumulated first as a vector of counts indexed by the
exponent of zeta (mod r) and converted to a CycloNumber once; for a product
like psi(mu; zeta) = prod (1 - zeta^{-(mu|alpha)}) this is a cyclic
convolution of short vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycloNumber, check_odd_prime
from .gauss import shifted_half_norm
from .rootsys import (
    DEFAULT_CAP,
    AffineWeylElement,
    RootSystem,
    Weight,
    affine_act,
    in_root_lattice,
    positive_root_pairings,
    reduce_to_dominant,
    scaled_inner,
    weyl_act,
    weyl_group,
)


@dataclass(frozen=True)
class CharacterContext:
    rs: RootSystem
    r: int
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        check_odd_prime(self.r)
        if self.r <= self.rs.n:
            raise ValueError(f"need r > n, got r={self.r}, n={self.rs.n}")

    @property
    def n(self) -> int:
        return self.rs.n


def psi_counts(pairings, r: int, power: int = 1, shift: int = 0) -> list[int]:
    """Exponent counts of zeta^shift * prod_p (1 - zeta^{-p})^power."""
    c = [0] * r
    c[shift % r] = 1
    for p in pairings:
        p %= r
        for _ in range(power):
            c = [c[k] - c[(k + p) % r] for k in range(r)]
    return c


def psi_at_root(ctx: CharacterContext, mu: Weight) -> CycloNumber:
    """psi(mu; zeta) = prod over positive roots of 1 - zeta^{-(mu|alpha)}."""
    return CycloNumber.from_q_counts(ctx.r, psi_counts(positive_root_pairings(ctx.rs, mu), ctx.r))


@lru_cache(maxsize=64)
def psi_rho(ctx: CharacterContext, power: int = 1) -> CycloNumber:
    return psi_at_root(ctx, ctx.rs.rho) ** power


def weyl_alternating_sum(ctx: CharacterContext, mu: Weight) -> CycloNumber:
    """sum over w in W of sn(w) zeta^{(mu | w(rho) - rho)}."""
    rs, r, n = ctx.rs, ctx.r, ctx.n
    counts = [0] * r
    for w in weyl_group(rs):
        s = scaled_inner(rs, mu, weyl_act(rs, w, rs.rho) - rs.rho)
        if s % n:
            raise ArithmeticError("(mu | w(rho) - rho) is not an integer")
        counts[(s // n) % r] += w.sign
    return CycloNumber.from_q_counts(r, counts)


def weyl_denominator_check(ctx: CharacterContext, mu: Weight) -> tuple[bool, dict]:
    lhs = psi_at_root(ctx, mu)
    rhs = weyl_alternating_sum(ctx, mu)
    return lhs == rhs, {"lhs": lhs, "rhs": rhs}


def _rho_exponent(rs: RootSystem, mu: Weight, factor: int = 1) -> int:
    """factor * (mu - rho | rho), required to be an integer."""
    s = factor * scaled_inner(rs, mu - rs.rho, rs.rho)
    if s % rs.n:
        raise ValueError(
            f"{factor} * (mu - rho | rho) is not an integer for mu = {mu.coords}; "
            "this needs half-integer powers of zeta"
        )
    return s // rs.n


def unknot_J(ctx: CharacterContext, mu: Weight) -> CycloNumber:
    """J_U(mu; zeta) = zeta^{(mu - rho|rho)} psi(mu; zeta) / psi(rho; zeta)."""
    e = _rho_exponent(ctx.rs, mu)
    num = CycloNumber.from_q_counts(ctx.r, psi_counts(positive_root_pairings(ctx.rs, mu), ctx.r, shift=e))
    return num / psi_rho(ctx)


def extended_J(ctx: CharacterContext, mu: Weight) -> CycloNumber:
    """J_U extended to all weights: 0 on chamber walls, else sn(w) J_U(w(mu))."""
    found = reduce_to_dominant(ctx.rs, mu)
    if found is None:
        return CycloNumber.zero(ctx.r)
    w, dominant = found
    return w.sign * unknot_J(ctx, dominant)


def _check_coset(rs: RootSystem, mu: Weight) -> None:
    if not in_root_lattice(rs, mu - rs.rho):
        raise ValueError(f"{mu.coords} is not in rho + root lattice")


def unknot_Q_counts(ctx: CharacterContext, mu: Weight, b: int) -> list[int]:
    """Exponent counts of zeta^{b(|mu|^2-|rho|^2)/2 + 2(mu-rho|rho)} psi(mu; zeta)^2."""
    _check_coset(ctx.rs, mu)
    e = b * shifted_half_norm(ctx.rs, mu) + _rho_exponent(ctx.rs, mu, 2)
    return psi_counts(positive_root_pairings(ctx.rs, mu), ctx.r, power=2, shift=e)


def unknot_Q(ctx: CharacterContext, mu: Weight, b: int = 0) -> CycloNumber:
    """Q_U(mu) with framing b, normalised so that Q_U(rho) = 1."""
    num = CycloNumber.from_q_counts(ctx.r, unknot_Q_counts(ctx, mu, b))
    return num / psi_rho(ctx, 2)


def affine_symmetry_check(
    ctx: CharacterContext, mu: Weight, w: AffineWeylElement, b: int = 0
) -> tuple[bool, dict]:
    """Q_U(w . mu) == Q_U(mu) at framing b (the identity is stated for b = 0)."""
    image = affine_act(ctx.rs, w, mu, ctx.r)
    lhs = unknot_Q(ctx, image, b)
    rhs = unknot_Q(ctx, mu, b)
    return lhs == rhs, {"mu": mu.coords, "image": image.coords, "lhs": lhs, "rhs": rhs}
