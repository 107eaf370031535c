"""Root and weight lattice data for sl_n (type A_{n-1}).

Weights are integer vectors in the fundamental-weight basis
lambda_1..lambda_{n-1}.  Roots are integer vectors in the simple-root basis
alpha_1..alpha_{n-1}.  Because (alpha_i | lambda_j) = delta_ij, pairing a root
with a weight is a plain dot product of the two coordinate vectors.

Weyl group elements act through the epsilon embedding: a weight with
lambda-coordinates k corresponds to e_j = k_j + k_{j+1} + ... + k_{n-1}
(with e_n = 0), and S_n permutes the e_j.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

MAX_RANK = 6
DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Weight:
    """Integer weight in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: Weight) -> Weight:
        _same_len(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        _same_len(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.coords)


def _same_len(mu: Weight, nu: Weight) -> None:
    if len(mu.coords) != len(nu.coords):
        raise ValueError(f"dimension mismatch: {len(mu.coords)} vs {len(nu.coords)}")


@dataclass(frozen=True)
class WeylElement:
    """Permutation of {0, ..., n-1} acting on epsilon coordinates.

    ``perm[j]`` is the position that the j-th epsilon coordinate moves to.
    """

    perm: tuple[int, ...]
    sign: int

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> WeylElement:
        perm = tuple(perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {perm}")
        return cls(perm, permutation_sign(perm))

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(tuple(range(n)), 1)

    def __mul__(self, other: WeylElement) -> WeylElement:
        # (self * other)(mu) = self(other(mu))
        perm = tuple(self.perm[p] for p in other.perm)
        return WeylElement(perm, self.sign * other.sign)

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for j, p in enumerate(self.perm):
            inv[p] = j
        return WeylElement(tuple(inv), self.sign)


@dataclass(frozen=True)
class AffineWeylElement:
    """mu -> finite(mu) + r * translation, translation in the root lattice."""

    finite: WeylElement
    translation: Weight


@dataclass(frozen=True)
class RootSystem:
    n: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: Weight

    @property
    def rank(self) -> int:
        return self.n - 1

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def weyl_order(self) -> int:
        return math.factorial(self.n)

    @property
    def theta(self) -> tuple[int, ...]:
        """The highest root alpha_1 + ... + alpha_{n-1}."""
        return (1,) * self.rank

    @property
    def rho_norm2(self) -> Fraction:
        """|rho|^2 = n(n^2 - 1)/12."""
        return inner_product(self, self.rho, self.rho)

    def simple_root(self, i: int) -> Weight:
        """alpha_i (1-indexed) in lambda coordinates, i.e. the i-th Cartan row."""
        return Weight(self.cartan[i - 1])

    def root_weight(self, alpha: Sequence[int]) -> Weight:
        """Convert a root-basis vector to lambda coordinates."""
        return Weight(_matvec(self.cartan, alpha))

    def zero(self) -> Weight:
        return Weight((0,) * self.rank)

    def weight(self, *coords: int) -> Weight:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return Weight(coords)


def _matvec(mat, vec):
    return tuple(sum(a * b for a, b in zip(row, vec)) for row in mat)


def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    m = n - 1
    return tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(m))
        for i in range(m)
    )


def cartan_inverse(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """(A^{-1})_{ij} = (n - i) j / n for i >= j (1-indexed), symmetric."""
    m = n - 1
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            hi, lo = max(i, j), min(i, j)
            row.append(Fraction((n - hi) * lo, n))
        rows.append(tuple(row))
    return tuple(rows)


def diagonalization(n: int) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[Fraction, ...]]:
    """Return (P, D) with A/2 = P^t D P, P unit upper triangular.

    D_jj = (j+1)/(2j) and P_{i,i+1} = -i/(i+1).
    """
    m = n - 1
    P = tuple(
        tuple(
            Fraction(1) if i == j else Fraction(-i, i + 1) if j == i + 1 else Fraction(0)
            for j in range(1, m + 1)
        )
        for i in range(1, m + 1)
    )
    D = tuple(Fraction(j + 1, 2 * j) for j in range(1, m + 1))
    return P, D


@lru_cache(maxsize=None)
def build_root_system(n: int) -> RootSystem:
    if not isinstance(n, int) or not 2 <= n <= MAX_RANK:
        raise ValueError(f"rank parameter n must satisfy 2 <= n <= {MAX_RANK}, got {n!r}")
    m = n - 1
    roots = []
    for i in range(m):
        for j in range(i, m):
            roots.append(tuple(1 if i <= t <= j else 0 for t in range(m)))
    return RootSystem(
        n=n,
        cartan=cartan_matrix(n),
        cartan_inv=cartan_inverse(n),
        positive_roots=tuple(roots),
        rho=Weight((1,) * m),
    )


@lru_cache(maxsize=None)
def _scaled_inverse(n: int) -> tuple[tuple[int, ...], ...]:
    # n * A^{-1} is integral
    return tuple(tuple(int(n * c) for c in row) for row in cartan_inverse(n))


def _check_dim(rs: RootSystem, *weights: Weight) -> None:
    for w in weights:
        if len(w.coords) != rs.rank:
            raise ValueError(
                f"dimension mismatch: weight has {len(w.coords)} coordinates, "
                f"root system expects {rs.rank}"
            )


def scaled_inner(rs: RootSystem, mu: Weight, nu: Weight) -> int:
    """n * (mu | nu), always an integer."""
    _check_dim(rs, mu, nu)
    S = _scaled_inverse(rs.n)
    k, m = mu.coords, nu.coords
    return sum(k[i] * sum(S[i][j] * m[j] for j in range(rs.rank)) for i in range(rs.rank))


def inner_product(rs: RootSystem, mu: Weight, nu: Weight) -> Fraction:
    return Fraction(scaled_inner(rs, mu, nu), rs.n)


def norm2(rs: RootSystem, mu: Weight) -> Fraction:
    return inner_product(rs, mu, mu)


def root_pairing(alpha: Sequence[int], mu: Weight) -> int:
    """(alpha | mu) for alpha in the root basis."""
    return sum(a * k for a, k in zip(alpha, mu.coords))


def root_norm2(rs: RootSystem, beta: Sequence[int]) -> int:
    """|beta|^2 = beta^t A beta for beta in the root basis (an even integer)."""
    A = rs.cartan
    return sum(beta[i] * A[i][j] * beta[j] for i in range(rs.rank) for j in range(rs.rank))


def in_root_lattice(rs: RootSystem, mu: Weight) -> bool:
    _check_dim(rs, mu)
    return sum((i + 1) * k for i, k in enumerate(mu.coords)) % rs.n == 0


def to_root_basis(rs: RootSystem, mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates of mu in the simple-root basis, A^{-1} k."""
    _check_dim(rs, mu)
    return tuple(sum(c * k for c, k in zip(row, mu.coords)) for row in rs.cartan_inv)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def weyl_group(rs: RootSystem) -> list[WeylElement]:
    if rs.n > MAX_RANK:
        raise ValueError(f"Weyl group enumeration guarded at n <= {MAX_RANK}")
    return [WeylElement.from_perm(p) for p in itertools.permutations(range(rs.n))]


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i for 1 <= i <= n-1: swaps epsilon coordinates i and i+1."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection index out of range: {i}")
    perm = list(range(rs.n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return WeylElement(tuple(perm), -1)


def _to_eps(mu: Weight) -> list[int]:
    k = mu.coords
    e = [0] * (len(k) + 1)
    for j in range(len(k) - 1, -1, -1):
        e[j] = e[j + 1] + k[j]
    return e


def _from_eps(e: Sequence[int]) -> Weight:
    return Weight(tuple(e[i] - e[i + 1] for i in range(len(e) - 1)))


def weyl_act(rs: RootSystem, w: WeylElement, mu: Weight) -> Weight:
    _check_dim(rs, mu)
    if len(w.perm) != rs.n:
        raise ValueError("Weyl element does not belong to this root system")
    e = _to_eps(mu)
    moved = [0] * rs.n
    for j, p in enumerate(w.perm):
        moved[p] = e[j]
    return _from_eps(moved)


def affine_act(rs: RootSystem, w: AffineWeylElement, mu: Weight, r: int) -> Weight:
    if r < 1:
        raise ValueError(f"level r must be positive, got {r}")
    if not in_root_lattice(rs, w.translation):
        raise ValueError("affine translation must lie in the root lattice")
    return weyl_act(rs, w.finite, mu) + r * w.translation


def check_box_size(rs: RootSystem, r: int, cap: int = DEFAULT_CAP) -> int:
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    size = r**rs.rank
    if size > cap:
        raise ValueError(f"box of {size} points exceeds enumeration cap {cap}")
    return size


def enumerate_box(rs: RootSystem, r: int, cap: int = DEFAULT_CAP) -> Iterator[Weight]:
    """rho + sum k_i alpha_i for 0 <= k_i < r, in lexicographic k order."""
    check_box_size(rs, r, cap)
    A = rs.cartan
    rho = rs.rho.coords
    for k in itertools.product(range(r), repeat=rs.rank):
        yield Weight(tuple(rho[i] + sum(A[i][j] * k[j] for j in range(rs.rank)) for i in range(rs.rank)))


def enumerate_alcove(rs: RootSystem, r: int) -> Iterator[Weight]:
    """Points of rho + root lattice with every lambda-coordinate >= 1 and (mu|theta) <= r.

    Points on the far wall (mu|theta) = r are included; they carry zero weight
    in every sum over the alcove.
    """
    if r < rs.n:
        raise ValueError(f"alcove at level r={r} has empty interior for n={rs.n}")
    m = rs.rank
    rho = rs.rho
    for coords in itertools.product(range(1, r + 1), repeat=m):
        if sum(coords) > r:
            continue
        mu = Weight(coords)
        if in_root_lattice(rs, mu - rho):
            yield mu


def positive_root_pairings(rs: RootSystem, mu: Weight) -> list[int]:
    return [root_pairing(alpha, mu) for alpha in rs.positive_roots]


def weyl_dimension(rs: RootSystem, mu: Weight) -> Fraction:
    """Delta(mu) = prod (mu|alpha) / prod (rho|alpha) over positive roots."""
    _check_dim(rs, mu)
    num = math.prod(positive_root_pairings(rs, mu))
    den = math.prod(positive_root_pairings(rs, rs.rho))
    return Fraction(num, den)


def reduce_to_dominant(rs: RootSystem, mu: Weight) -> tuple[WeylElement, Weight] | None:
    """Return (w, w(mu)) with w(mu) strongly dominant, or None on a chamber wall."""
    e = _to_eps(mu)
    if len(set(e)) < len(e):
        return None
    order = sorted(range(rs.n), key=lambda j: -e[j])
    perm = [0] * rs.n
    for rank, j in enumerate(order):
        perm[j] = rank
    w = WeylElement.from_perm(perm)
    return w, weyl_act(rs, w, mu)


def on_affine_wall(rs: RootSystem, mu: Weight, r: int) -> bool:
    """True when mu lies on a reflecting hyperplane of the level-r affine Weyl group."""
    return any(p % r == 0 for p in positive_root_pairings(rs, mu))
