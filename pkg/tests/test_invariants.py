import cmath
import math
from fractions import Fraction

import pytest

from psuinv.characters import CharacterContext
from psuinv.cyclotomic import CycloNumber, reduce_p_r, xi_valuation
from psuinv.gauss import root_gauss_brute
from psuinv.invariants import (
    EtaMonomial,
    F_alcove,
    F_unknot_brute,
    F_unknot_closed,
    F_unknot_valuation,
    SurgeryPresentation,
    binomial_gauss_sum,
    binomial_sum_check,
    congruence_check,
    eta_gauss_sum,
    framings_from_list,
    g_b_bruteform,
    gauss_context,
    gamma_order_bound,
    gamma_transform,
    generalized_binomial,
    series_constant_term,
    tau_r_lens_brute,
    tau_r_lens_closed,
    tau_r_surgery,
    tau_series_surgery,
    y_series,
)
from psuinv.rootsys import build_root_system, enumerate_box, norm2, root_pairing
from psuinv.series import TruncSeries, series_invert, series_p_r


def ctx(n, r):
    return CharacterContext(build_root_system(n), r)


def numeric(u: CycloNumber) -> complex:
    x = cmath.exp(2j * math.pi / u.r) - 1
    return sum(float(c) * x**j for j, c in enumerate(u.coeffs))


def S(*coeffs):
    return TruncSeries(len(coeffs) - 1, tuple(Fraction(c) for c in coeffs))


def test_presentation():
    p = SurgeryPresentation((2, -3, 5))
    assert p.h1_order == 30
    assert (p.sigma_plus, p.sigma_minus) == (2, 1)
    assert framings_from_list([1]).framings == (1,)
    with pytest.raises(ValueError):
        SurgeryPresentation(())
    with pytest.raises(ValueError):
        SurgeryPresentation((2, 0))
    with pytest.raises(ValueError):
        EtaMonomial((1, -1))
    assert EtaMonomial((2, 1)).degree == 3


@pytest.mark.parametrize("n,r", [(2, 5), (2, 7), (3, 5), (3, 7), (3, 11), (4, 7)])
def test_F_forms_agree(n, r):
    c = ctx(n, r)
    for b in (1, -1, 2, -2, 3, 4, -4):
        if b % r == 0:
            continue
        brute = F_unknot_brute(c, b)
        assert brute == F_unknot_closed(c, b)
        assert brute == math.factorial(n) * F_alcove(c, b)
        assert xi_valuation(brute) == F_unknot_valuation(n, r)


def test_F_example_by_hand():
    # n = 2, r = 5, b = 1: alcove points mu in {1, 3, 5}; Q(1) = 1, Q(3) = zeta^2 [3]^2, Q(5) = 0
    c = ctx(2, 5)
    z = CycloNumber.zeta(5)
    q3 = z * z * (z**-1 + 1 + z) ** 2
    assert F_alcove(c, 1) == 1 + q3
    assert xi_valuation(F_alcove(c, 1)) == 1


def quantum_dimension(rs, mu, r) -> float:
    out = 1.0
    for alpha in rs.positive_roots:
        out *= math.sin(math.pi * root_pairing(alpha, mu) / r) / math.sin(math.pi * root_pairing(alpha, rs.rho) / r)
    return out


@pytest.mark.parametrize("n,r,b", [(2, 7, 1), (3, 7, 2), (3, 11, -3), (4, 7, 1)])
def test_F_matches_trigonometric_sum(n, r, b):
    """Floating-point oracle: Q is zeta^{b(|mu|^2-|rho|^2)/2} times the squared quantum dimension."""
    c = ctx(n, r)
    rs = c.rs
    direct = 0
    for mu in enumerate_box(rs, r):
        phase = cmath.exp(1j * math.pi * b * float(norm2(rs, mu) - rs.rho_norm2) / r)
        direct += phase * quantum_dimension(rs, mu, r) ** 2
    assert abs(numeric(F_unknot_brute(c, b)) - direct) < 1e-6


def trig_F(rs, r, b) -> complex:
    total = 0
    for mu in enumerate_box(rs, r):
        phase = cmath.exp(1j * math.pi * b * float(norm2(rs, mu) - rs.rho_norm2) / r)
        total += phase * quantum_dimension(rs, mu, r) ** 2
    return total


def test_lens_examples():
    for n, r in [(2, 5), (2, 7), (3, 7), (3, 11)]:
        c = ctx(n, r)
        for b in (1, -1):
            assert tau_r_lens_brute(c, b) == 1
            if r > n * (n - 1):
                assert tau_r_surgery(c, SurgeryPresentation((b,))) == 1
    c = ctx(2, 5)
    value = tau_r_lens_brute(c, 2)
    assert value.to_json()["coeffs"] == ["2", "5", "4", "1"]
    assert value == tau_r_lens_closed(c, 2)
    assert abs(numeric(value) - trig_F(c.rs, 5, 2) / trig_F(c.rs, 5, 1)) < 1e-9


@pytest.mark.parametrize("n,r", [(2, 5), (2, 7), (2, 11), (3, 7), (3, 11), (4, 13)])
def test_lens_closed_form(n, r):
    c = ctx(n, r)
    for b in range(-min(r - 1, 5), min(r, 6)):
        if b == 0:
            continue
        value = tau_r_lens_brute(c, b)
        assert value == tau_r_lens_closed(c, b)
        assert value.is_integral() and xi_valuation(value) == 0
    with pytest.raises(ValueError):
        tau_r_lens_closed(c, r + 1)


def test_surgery_is_multiplicative():
    c = ctx(2, 7)
    product = tau_r_surgery(c, SurgeryPresentation((2,))) * tau_r_surgery(c, SurgeryPresentation((-3,)))
    assert tau_r_surgery(c, SurgeryPresentation((2, -3))) == product
    with pytest.raises(ValueError):
        tau_r_surgery(c, SurgeryPresentation((7,)))
    with pytest.raises(ValueError):
        tau_r_surgery(ctx(3, 5), SurgeryPresentation((2,)))


def test_series_examples():
    c5 = ctx(2, 5)
    assert tau_series_surgery(c5, SurgeryPresentation((2,)), 0) == S(Fraction(-1, 2))
    c7 = ctx(2, 7)
    assert tau_series_surgery(c7, SurgeryPresentation((2,)), 3) == S(Fraction(1, 2), 0, Fraction(-1, 64), Fraction(1, 64))
    for n in (2, 3):
        for b in (1, -1):
            assert tau_series_surgery(ctx(n, 7), SurgeryPresentation((b,)), 4) == TruncSeries.constant(1, 4)
    # the series of a connected sum is the product of the factors; inverting one factor recovers the other
    two = tau_series_surgery(c7, SurgeryPresentation((2,)), 5)
    both = tau_series_surgery(c7, SurgeryPresentation((2, -3)), 5)
    assert both * series_invert(two) == tau_series_surgery(c7, SurgeryPresentation((-3,)), 5)


@pytest.mark.parametrize("framings", [(2,), (-3,), (3, -2), (2, 2, 3), (5,)])
@pytest.mark.parametrize("n,r", [(2, 7), (2, 13), (3, 11)])
def test_constant_term(n, r, framings):
    c = ctx(n, r)
    pres = SurgeryPresentation(framings)
    if pres.h1_order % r == 0:
        return
    assert tau_series_surgery(c, pres, 2)[0] == series_constant_term(c, pres)


def test_y_and_gamma_examples():
    c = ctx(2, 5)
    assert y_series(c, 1, 3) == S(0, Fraction(-1, 2), 0, 0)
    assert gamma_transform(c, EtaMonomial((2,)), 1, 4) == S(0, 0, 1, -4, 9)
    assert gamma_order_bound(2, EtaMonomial((2,))) == 2
    assert gamma_order_bound(3, EtaMonomial((1, 0))) == 4
    with pytest.raises(ValueError):
        gamma_transform(c, EtaMonomial((1, 1)), 1, 3)


@pytest.mark.parametrize("n,r", [(2, 7), (3, 7), (2, 11)])
def test_gamma_order_bound(n, r):
    c = ctx(n, r)
    rank = n - 1
    for deg in range(0, 5):
        for a in _monomials(rank, deg):
            bound = gamma_order_bound(n, a)
            for b in (1, -2, 3):
                g = gamma_transform(c, a, b, bound + 1)
                assert g.x_order() is None or g.x_order() >= bound


def _monomials(rank, degree):
    if rank == 1:
        yield EtaMonomial((degree,))
        return
    for first in range(degree + 1):
        for rest in _monomials(rank - 1, degree - first):
            yield EtaMonomial((first,) + rest.a)


@pytest.mark.parametrize("n,r", [(2, 7), (3, 7), (2, 11)])
def test_g_b_matches_gamma(n, r):
    c = ctx(n, r)
    rb = (r - 1 - n * (n - 1)) // 2
    for deg in range(0, 4):
        for a in _monomials(n - 1, deg):
            for b in (1, -1, 2):
                order = max(rb, gamma_order_bound(n, a) + 1)
                lhs = reduce_p_r(g_b_bruteform(c, a, b), n)
                rhs = series_p_r(gamma_transform(c, a, b, order), r, n)
                assert lhs == rhs


def test_g_b_unit_case():
    # the empty monomial reduces the sum to the plain Gauss sum and Gamma_b to y_b
    c = ctx(2, 7)
    one = EtaMonomial((0,))
    for b in (2, -3):
        assert eta_gauss_sum(c, one, b) == root_gauss_brute(gauss_context(c), b)
        assert g_b_bruteform(c, one, b) * F_unknot_brute(c, 1 if b > 0 else -1) == eta_gauss_sum(c, one, b)
        assert gamma_transform(c, one, b, 4) == y_series(c, b, 4)


def test_binomial_sums():
    assert [generalized_binomial(t, 2) for t in (-2, -1, 0, 1, 2, 5)] == [3, 1, 0, 0, 1, 10]
    assert generalized_binomial(7, 0) == 1
    c = ctx(2, 7)
    assert binomial_gauss_sum(c, EtaMonomial((0,)), 1).to_json()["coeffs"] == ["-7", "-21", "-28", "-20", "-7", "-1"]
    ok, payload = binomial_sum_check(c, EtaMonomial((2,)), 1)
    assert ok and payload == {"valuation": 2, "bound": 2}
    for n, r in [(2, 7), (3, 7), (2, 11)]:
        cc = ctx(n, r)
        for deg in range(0, 5):
            for a in _monomials(n - 1, deg):
                for b in (1, -1, 2, 3):
                    assert binomial_sum_check(cc, a, b)[0]


def test_congruence_reports():
    ok, report = congruence_check(ctx(2, 7), SurgeryPresentation((2,)))
    assert ok
    assert report == {"n": 2, "r": 7, "framings": [2], "rbar": 2, "lhs": [4, 0, 6], "rhs": [4, 0, 6], "pass": True}
    ok, report = congruence_check(ctx(3, 11), SurgeryPresentation((2, -3)))
    assert ok and report["lhs"] == [8, 9, 5]
    # a composite |H_1| larger than r, still prime to r
    assert congruence_check(ctx(2, 5), SurgeryPresentation((2, 2, 3)))[0]
    with pytest.raises(ValueError):
        congruence_check(ctx(2, 7), SurgeryPresentation((2,)), order=1)
    with pytest.raises(ValueError):
        congruence_check(ctx(2, 5), SurgeryPresentation((5,)))
