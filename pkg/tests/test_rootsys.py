from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psuinv.rootsys import (
    AffineWeylElement,
    Weight,
    WeylElement,
    affine_act,
    build_root_system,
    diagonalization,
    enumerate_alcove,
    enumerate_box,
    in_root_lattice,
    inner_product,
    norm2,
    reduce_to_dominant,
    root_pairing,
    simple_reflection,
    to_root_basis,
    weyl_act,
    weyl_dimension,
    weyl_group,
)

RANKS = [2, 3, 4, 5, 6]


def matmul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(len(Y[0]))] for i in range(len(X))]


def transpose(X):
    return [list(row) for row in zip(*X)]


@pytest.mark.parametrize("n", RANKS)
def test_cartan_data(n):
    rs = build_root_system(n)
    m = n - 1
    A = rs.cartan
    for i in range(m):
        for j in range(m):
            expected = 2 if i == j else -1 if abs(i - j) == 1 else 0
            assert A[i][j] == expected
    prod = matmul(A, rs.cartan_inv)
    assert prod == [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for i in range(1, m + 1):
        for j in range(1, i + 1):
            assert rs.cartan_inv[i - 1][j - 1] == Fraction((n - i) * j, n)
            assert rs.cartan_inv[j - 1][i - 1] == rs.cartan_inv[i - 1][j - 1]


@pytest.mark.parametrize("n", RANKS)
def test_positive_roots_and_rho(n):
    rs = build_root_system(n)
    assert rs.num_positive_roots == n * (n - 1) // 2
    assert norm2(rs, rs.rho) == Fraction(n * (n * n - 1), 12)
    for alpha in rs.positive_roots:
        assert 1 <= root_pairing(alpha, rs.rho) <= n - 1


@pytest.mark.parametrize("n", RANKS)
def test_diagonalization(n):
    P, D = diagonalization(n)
    m = n - 1
    for i in range(m):
        assert P[i][i] == 1
        for j in range(i):
            assert P[i][j] == 0
    Dm = [[D[i] if i == j else Fraction(0) for j in range(m)] for i in range(m)]
    lhs = matmul(matmul(transpose(P), Dm), P)
    A = build_root_system(n).cartan
    assert [[2 * c for c in row] for row in lhs] == [list(row) for row in A]


def test_small_root_systems():
    rs2 = build_root_system(2)
    assert rs2.positive_roots == ((1,),)
    assert rs2.rho_norm2 == Fraction(1, 2)
    rs3 = build_root_system(3)
    assert set(rs3.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert root_pairing(rs3.theta, rs3.rho) == 2
    assert build_root_system(4).num_positive_roots == 6


@pytest.mark.parametrize("n", [0, 1, 7, 10])
def test_rank_guard(n):
    with pytest.raises(ValueError):
        build_root_system(n)


def test_inner_product_examples():
    rs2 = build_root_system(2)
    assert inner_product(rs2, Weight((1,)), Weight((1,))) == Fraction(1, 2)
    assert inner_product(rs2, rs2.simple_root(1), Weight((1,))) == 1
    rs3 = build_root_system(3)
    assert inner_product(rs3, rs3.rho, rs3.rho) == 2
    with pytest.raises(ValueError):
        inner_product(rs3, Weight((1,)), rs3.rho)


def test_root_lattice_examples():
    rs3 = build_root_system(3)
    assert in_root_lattice(rs3, rs3.rho)
    assert not in_root_lattice(build_root_system(2), Weight((1,)))
    for n in RANKS:
        rs = build_root_system(n)
        assert in_root_lattice(rs, rs.zero())


weights = st.integers(min_value=-8, max_value=8)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_root_lattice_matches_alpha_coordinates(n, data):
    rs = build_root_system(n)
    mu = Weight(tuple(data.draw(weights) for _ in range(rs.rank)))
    integral = all(c.denominator == 1 for c in to_root_basis(rs, mu))
    assert in_root_lattice(rs, mu) == integral


@pytest.mark.parametrize("n,count,odd", [(2, 2, 1), (3, 6, 3), (4, 24, 12)])
def test_weyl_group_size(n, count, odd):
    W = weyl_group(build_root_system(n))
    assert len(W) == count
    assert len({w.perm for w in W}) == count
    assert sum(1 for w in W if w.sign == -1) == odd
    assert WeylElement.identity(n) in W


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.data())
def test_weyl_action_properties(n, data):
    rs = build_root_system(n)
    W = weyl_group(rs)
    w = data.draw(st.sampled_from(W))
    v = data.draw(st.sampled_from(W))
    mu = Weight(tuple(data.draw(weights) for _ in range(rs.rank)))
    nu = Weight(tuple(data.draw(weights) for _ in range(rs.rank)))
    assert (w * v).sign == w.sign * v.sign
    assert weyl_act(rs, w * v, mu) == weyl_act(rs, w, weyl_act(rs, v, mu))
    assert inner_product(rs, weyl_act(rs, w, mu), weyl_act(rs, w, nu)) == inner_product(rs, mu, nu)
    assert weyl_act(rs, w.inverse(), weyl_act(rs, w, mu)) == mu
    assert weyl_dimension(rs, weyl_act(rs, w, mu)) == w.sign * weyl_dimension(rs, mu)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_simple_reflections(n):
    rs = build_root_system(n)
    mu = Weight(tuple(range(3, 3 + rs.rank)))
    for i in range(1, n):
        s = simple_reflection(rs, i)
        alpha = rs.simple_root(i)
        assert weyl_act(rs, s, rs.rho) == rs.rho - alpha
        assert weyl_act(rs, s, mu) == mu - mu.coords[i - 1] * alpha


def test_weyl_action_examples():
    rs2 = build_root_system(2)
    s1 = simple_reflection(rs2, 1)
    assert weyl_act(rs2, s1, rs2.rho) == Weight((-1,))
    assert weyl_act(rs2, WeylElement.identity(2), Weight((7,))) == Weight((7,))


def test_affine_examples():
    rs3 = build_root_system(3)
    t = AffineWeylElement(WeylElement.identity(3), rs3.simple_root(1))
    assert affine_act(rs3, t, rs3.zero(), 5) == Weight((10, -5))
    rs2 = build_root_system(2)
    w = AffineWeylElement(simple_reflection(rs2, 1), rs2.simple_root(1))
    assert affine_act(rs2, w, rs2.rho, 3) == Weight((5,))
    with pytest.raises(ValueError):
        affine_act(rs2, AffineWeylElement(WeylElement.identity(2), Weight((1,))), rs2.rho, 3)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=13), st.data())
def test_affine_action_preserves_cosets(n, r, data):
    rs = build_root_system(n)
    W = weyl_group(rs)
    beta = rs.root_weight([data.draw(weights) for _ in range(rs.rank)])
    w = AffineWeylElement(data.draw(st.sampled_from(W)), beta)
    k = [data.draw(weights) for _ in range(rs.rank)]
    mu = rs.rho + rs.root_weight(k)
    assert in_root_lattice(rs, affine_act(rs, w, mu, r) - rs.rho)
    assert in_root_lattice(rs, affine_act(rs, w, rs.root_weight(k), r))


def test_box_enumeration():
    rs2 = build_root_system(2)
    box = list(enumerate_box(rs2, 5))
    assert box == [rs2.rho + k * rs2.simple_root(1) for k in range(5)]
    rs3 = build_root_system(3)
    box3 = list(enumerate_box(rs3, 7))
    assert len(box3) == 49 and len(set(box3)) == 49
    assert all(in_root_lattice(rs3, mu - rs3.rho) for mu in box3)
    with pytest.raises(ValueError):
        list(enumerate_box(build_root_system(4), 13, cap=1000))


def brute_alcove(rs, r):
    """Weights of rho + root lattice with coordinates >= 1 and (mu|theta) <= r, by filtering a cube."""
    import itertools

    out = set()
    for coords in itertools.product(range(-1, r + 2), repeat=rs.rank):
        mu = Weight(coords)
        if min(coords) >= 1 and root_pairing(rs.theta, mu) <= r and in_root_lattice(rs, mu - rs.rho):
            out.add(mu)
    return out


def test_alcove_enumeration():
    rs2 = build_root_system(2)
    assert [mu.coords for mu in enumerate_alcove(rs2, 5)] == [(1,), (3,), (5,)]
    rs3 = build_root_system(3)
    pts = set(enumerate_alcove(rs3, 4))
    assert pts == brute_alcove(rs3, 4)
    assert pts == {Weight((1, 1)), Weight((2, 2))}
    for n, r in [(3, 7), (4, 7), (4, 5)]:
        rs = build_root_system(n)
        assert set(enumerate_alcove(rs, r)) == brute_alcove(rs, r)
    with pytest.raises(ValueError):
        list(enumerate_alcove(rs3, 2))


def test_weyl_dimension_examples():
    rs2 = build_root_system(2)
    assert weyl_dimension(rs2, rs2.rho) == 1
    assert weyl_dimension(rs2, Weight((3,))) == 3
    rs3 = build_root_system(3)
    assert weyl_dimension(rs3, Weight((2, 1))) == 3
    assert weyl_dimension(rs3, Weight((0, 4))) == 0


def test_reduce_to_dominant_examples():
    rs2 = build_root_system(2)
    w, mu = reduce_to_dominant(rs2, Weight((4,)))
    assert w == WeylElement.identity(2) and mu == Weight((4,))
    w, mu = reduce_to_dominant(rs2, -rs2.rho)
    assert w == simple_reflection(rs2, 1) and mu == rs2.rho
    assert reduce_to_dominant(rs2, rs2.zero()) is None


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.data())
def test_reduce_to_dominant_property(n, data):
    rs = build_root_system(n)
    mu = Weight(tuple(data.draw(weights) for _ in range(rs.rank)))
    found = reduce_to_dominant(rs, mu)
    if found is None:
        assert weyl_dimension(rs, mu) == 0
    else:
        w, dom = found
        assert min(dom.coords) >= 1
        assert weyl_act(rs, w, mu) == dom
        # uniqueness: no other group element lands in the dominant chamber
        others = [v for v in weyl_group(rs) if min(weyl_act(rs, v, mu).coords) >= 1]
        assert others == [w]
