import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_redux.errors import BrauerReduxError
from brauer_redux.euler import (
    NumericalPolynomial,
    RRInput,
    alternating_binomial_sum,
    fm_twisted_rank,
    leading_coefficient_times_factorial,
    period_index_bound_check,
    twisted_euler_char,
)
from oracles import binomial_to_monomial, integer_valued_on_window

NP = NumericalPolynomial
F = Fraction


@pytest.mark.parametrize("deg,rank,genus,expected", [(3, 2, 1, 3), (0, 1, 0, 1), (2, 3, 2, -1)])
def test_twisted_euler_char(deg, rank, genus, expected):
    assert twisted_euler_char(RRInput(deg, rank, genus)) == expected


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 20), st.integers(1, 20), st.integers(0, 10))
def test_rr_linear_in_degree_and_rank(d1, d2, r1, r2, g):
    lhs = twisted_euler_char(RRInput(d1 + d2, r1 + r2, g))
    rhs = twisted_euler_char(RRInput(d1, r1, g)) + twisted_euler_char(RRInput(d2, r2, g))
    assert lhs == rhs


def test_rr_scaled_degree():
    assert RRInput.from_scaled(6, 3, 1, 0) == RRInput(2, 1, 0)
    with pytest.raises(BrauerReduxError):
        RRInput.from_scaled(5, 3, 1, 0)
    with pytest.raises(BrauerReduxError):
        RRInput(1, 0, 1)
    with pytest.raises(BrauerReduxError):
        RRInput(1, 1, -1)


class TestNumericalPolynomial:
    def test_trims_and_degree(self):
        assert NP([1, 2, 0, 0]).degree == 1
        assert NP([0]).degree == -1
        assert NP([]).degree == -1

    def test_rejects_non_integer_valued(self):
        with pytest.raises(BrauerReduxError, match="integer-valued"):
            NP([0, 1, F(1, 3)])
        with pytest.raises(TypeError):
            NP([0.5])

    def test_degree_cap(self):
        with pytest.raises(BrauerReduxError):
            NP([0] * 13 + [1])

    def test_binomial_polynomial_accepted(self):
        p = NP([0, F(1, 2), F(1, 2)])
        assert [p(m) for m in range(5)] == [0, 1, 3, 6, 10]
        assert p.binomial_coordinates() == [0, 1, 1]

    def test_from_binomial_matches_interpolation(self):
        rng = random.Random(1)
        for _ in range(100):
            coords = [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))]
            assert list(NP.from_binomial(coords).coeffs) == _trim(binomial_to_monomial(coords))

    def test_integrality_matches_window_oracle(self):
        # random rational coefficients with small denominators, degree <= 6
        rng = random.Random(8)
        accepted = 0
        for _ in range(400):
            deg = rng.randint(0, 6)
            coeffs = [F(rng.randint(-6, 6), rng.choice([1, 1, 2, 3, 6, 24, 120, 720])) for _ in range(deg + 1)]
            try:
                NP(coeffs)
                ok = True
            except BrauerReduxError:
                ok = False
            accepted += ok
            assert ok == integer_valued_on_window(coeffs)
        assert accepted > 20

    def test_json(self):
        # 1/2 + m/2 is not integer-valued
        raw = NP.from_json({"coeffs": ["1/2", "1/2", "0"]}, check=False)
        assert raw.coeffs == (F(1, 2), F(1, 2))
        with pytest.raises(BrauerReduxError):
            NP.from_json({"coeffs": ["1/2", "1/2", "0"]})
        p = NP.from_json({"coeffs": ["0", "1/2", "1/2"]})
        assert p.to_json() == {"coeffs": ["0", "1/2", "1/2"]}
        assert NP.from_json(p.to_json()) == p


def _trim(cs):
    cs = list(cs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs


class TestAlternatingSum:
    def test_square(self):
        assert alternating_binomial_sum(NP([0, 0, 1]), 2, 0) == 2

    def test_constant(self):
        for m in (-3, 0, 4):
            assert alternating_binomial_sum(NP([5]), 1, m) == 0

    def test_half_cube_plus_m(self):
        # not integer-valued (1/2 at m=1 gives 3/2), so validation is off
        chi = NP([0, 1, 0, F(1, 2)], check=False)
        assert alternating_binomial_sum(chi, 3, 7) == 3
        assert {alternating_binomial_sum(chi, 3, m) for m in range(-5, 6)} == {F(3)}
        assert leading_coefficient_times_factorial(chi, 3) == 3

    def test_above_degree_vanishes(self):
        rng = random.Random(4)
        for _ in range(100):
            deg = rng.randint(0, 5)
            chi = NP.from_binomial([rng.randint(-5, 5) for _ in range(deg + 1)])
            for t in range(deg + 1, 8):
                assert alternating_binomial_sum(chi, t, rng.randint(-20, 20)) == 0

    def test_t_zero_is_evaluation(self):
        chi = NP([1, 2, 3])
        assert alternating_binomial_sum(chi, 0, 4) == chi(4)


class TestLeadingCoefficient:
    @pytest.mark.parametrize("coeffs,t,expected", [
        ([0, F(1, 2), F(1, 2)], 2, 1),
        ([0, 1], 1, 1),
        ([0, 0, 0, 1], 3, 6),  # (6/3!) m^3
    ])
    def test_examples(self, coeffs, t, expected):
        chi = NP(coeffs)
        assert leading_coefficient_times_factorial(chi, t) == expected
        assert alternating_binomial_sum(chi, t, 0) == expected

    def test_degree_mismatch(self):
        with pytest.raises(BrauerReduxError):
            leading_coefficient_times_factorial(NP([0, 1]), 2)

    @given(st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0),
           st.integers(-30, 30))
    def test_identity_on_binomial_basis(self, coords, m):
        chi = NP.from_binomial(coords)
        t = len(coords) - 1
        # top binomial coordinate equals t! times the leading coefficient
        assert leading_coefficient_times_factorial(chi, t) == coords[-1]
        assert alternating_binomial_sum(chi, t, m) == coords[-1]


@pytest.mark.parametrize("g,n,expected", [(1, 1, 1), (2, 3, 9), (5, 2, 32)])
def test_fm_rank(g, n, expected):
    assert fm_twisted_rank(g, n) == expected
    assert expected**2 == n ** (2 * g)


def test_fm_rank_rejects():
    with pytest.raises(BrauerReduxError):
        fm_twisted_rank(0, 2)


@pytest.mark.parametrize("per,ind,g,expected", [(2, 4, 2, True), (2, 32, 2, False), (3, 3, 1, True), (2, 8, 2, False)])
def test_pi_check(per, ind, g, expected):
    assert period_index_bound_check(per, ind, g) is expected
    assert period_index_bound_check(per, ind, g, odd_order=True) is expected


def test_pi_check_rejects():
    with pytest.raises(BrauerReduxError):
        period_index_bound_check(0, 1, 1)


def test_binomial_helper_sanity():
    assert sum(comb(5, j) * (-1) ** j for j in range(6)) == 0
    assert factorial(4) == 24
