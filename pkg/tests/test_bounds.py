"""Unit tests for the exact bound formulas and recurrences."""

import math
from fractions import Fraction

import pytest

from quadbetti.bounds import (
    AggregateBounds,
    b_ci,
    b_quad,
    bound_aggregate,
    bound_betti,
    bound_betti_floor,
    c_ci,
    q_quad,
)


class TestQQuad:
    def test_base_cases(self):
        assert q_quad(0, 5) == 6
        assert q_quad(3, 3) == 8
        assert q_quad(0, 0) == 1

    def test_recurrence_unroll(self):
        # independent hand-unroll: q(1,2) = 2*q(0,1) - q(1,1) = 4 - 2 = 2,
        # q(2,2) = 4, so q(2,3) = 2*q(1,2) - q(2,2) = 0
        assert q_quad(1, 2) == 2
        assert q_quad(2, 2) == 4
        assert q_quad(2, 3) == 0
        # cross-check with the degree-one closed form (-1)^3 * 3 + 3
        assert q_quad(2, 3) == (-1) ** 3 * 3 + 3

    def test_values_can_be_negative(self):
        assert any(q_quad(j, k) < 0 for k in range(2, 12) for j in range(2, k + 1))

    @pytest.mark.parametrize("j,k", [(-1, 3), (2, -1), (4, 3)])
    def test_domain_errors(self, j, k):
        with pytest.raises(ValueError):
            q_quad(j, k)


class TestBQuad:
    def test_known_varieties(self):
        # smooth quadric surface in P^3: mod-2 Betti 1+0+2+0+1 = 4
        assert b_quad(1, 3) == 4
        # intersection of two quadrics in P^3 is an elliptic curve: 1+2+1 = 4
        assert b_quad(2, 3) == 4
        # j = k case: 2^j points counted with the even branch
        assert b_quad(4, 4) == 16
        # smooth conic is a 2-sphere over the complex numbers: 1+0+1 = 2
        assert b_quad(1, 2) == 2

    def test_nonnegative_everywhere(self):
        for k in range(0, 40):
            for j in range(0, k + 1):
                assert b_quad(j, k) >= 0

    def test_domain_error(self):
        with pytest.raises(ValueError):
            b_quad(5, 2)


class TestCCi:
    def test_base_cases(self):
        assert c_ci(0, 7, ()) == 8
        assert c_ci(2, 2, (2, 2)) == 4

    def test_quartic_surface_unroll(self):
        # c(1,2,(4)) = 4*c(0,1,()) - 3*c(1,1,(4)) = 8 - 12 = -4
        assert c_ci(1, 2, (4,)) == -4
        # c(1,3,(4)) = 4*c(0,2,()) - 3*c(1,2,(4)) = 12 + 12 = 24 (K3: 1+22+1)
        assert c_ci(1, 3, (4,)) == 24

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            c_ci(2, 3, (2,))
        with pytest.raises(ValueError):
            c_ci(0, 3, (2,))

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            c_ci(1, 2, (0,))


class TestBCi:
    def test_known_varieties(self):
        # plane cubic is an elliptic curve: 1+2+1 = 4
        assert b_ci(1, 2, (3,)) == 4
        # must collapse to the all-quadrics value
        assert b_ci(1, 3, (2,)) == 4 == b_quad(1, 3)
        # Bezout: 2*2*2 points
        assert b_ci(3, 3, (2, 2, 2)) == 8
        # smooth plane conic
        assert b_ci(1, 2, (2,)) == 2
        # degree-10 plane curve has genus 36: 1 + 72 + 1
        assert b_ci(1, 2, (10,)) == 74

    def test_hyperplane_sections_give_projective_space(self):
        # j hyperplanes cut P^k down to P^{k-j}, total mod-2 Betti k-j+1
        for k in range(1, 12):
            for j in range(1, k + 1):
                assert b_ci(j, k, (1,) * j) == k - j + 1

    def test_all_two_degrees_agree_with_b_quad(self):
        for k in range(0, 61):
            for j in range(0, k + 1):
                assert b_ci(j, k, (2,) * j) == b_quad(j, k)

    def test_nonnegative_on_mixed_degrees(self):
        import random

        rng = random.Random(7)
        for _ in range(200):
            k = rng.randint(1, 14)
            j = rng.randint(0, k)
            degrees = tuple(rng.randint(1, 6) for _ in range(j))
            assert b_ci(j, k, degrees) >= 0


class TestQClosedForms:
    def test_degree_one_closed_form(self):
        for k in range(1, 201):
            assert q_quad(1, k) == k + (1 - (-1) ** k) // 2

    def test_degree_two_closed_form(self):
        for k in range(2, 201):
            assert q_quad(2, k) == (-1) ** k * k + k

    def test_absolute_value_bound(self):
        for k in range(2, 61):
            for j in range(2, k + 1):
                assert abs(q_quad(j, k)) <= 2 ** (j - 1) * math.comb(k, j - 1)

    def test_odd_case_bound(self):
        for k in range(2, 61):
            for j in range(2, k + 1):
                if (k - j) % 2 == 1:
                    assert 2 * (k - j + 1) - q_quad(j, k) <= 2 ** (j - 1) * math.comb(
                        k, j - 1
                    )


class TestBQuadBounds:
    def test_single_quadric_case_formula(self):
        for k in range(1, 201):
            if k % 2 == 0:
                assert b_quad(1, k) == q_quad(0, k - 1) == k
            else:
                assert b_quad(1, k) == q_quad(0, k) == k + 1

    def test_binomial_bound(self):
        for k in range(2, 61):
            for j in range(2, k + 1):
                assert b_quad(j, k) <= 2 ** (j - 1) * math.comb(k, j - 1)


class TestBoundBetti:
    def test_examples(self):
        assert bound_betti(1, 1, 0) == Fraction(5, 2)
        assert bound_betti(2, 4, 0) == Fraction(61, 2)
        # min{3, 6-5} = 1 truncates the sum
        assert bound_betti(3, 6, 5) == Fraction(43, 2)
        assert bound_betti(3, 3, 0) == Fraction(129, 2)
        assert bound_betti(2, 2, 1) == Fraction(13, 2)

    def test_floor_accessor(self):
        assert bound_betti_floor(1, 1, 0) == 2
        assert bound_betti_floor(2, 4, 0) == 30

    @pytest.mark.parametrize("s,k,i", [(0, 3, 0), (4, 3, 0), (2, 3, -1), (2, 3, 3)])
    def test_domain_errors(self, s, k, i):
        with pytest.raises(ValueError):
            bound_betti(s, k, i)


class TestBoundAggregate:
    def test_examples(self):
        assert bound_aggregate(2, 4).simple == Fraction(45)
        assert bound_aggregate(1, 2).total == Fraction(7)
        assert bound_aggregate(2, 5).simple == Fraction(135, 2)

    def test_fields_gated_independently(self):
        agg = bound_aggregate(1, 4)
        assert agg.simple is None and agg.exp_form is None
        assert agg.total > 0
        agg = bound_aggregate(3, 5)  # 2s > k
        assert agg.simple is None
        assert isinstance(bound_aggregate(2, 4), AggregateBounds)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bound_aggregate(0, 4)
        with pytest.raises(ValueError):
            bound_aggregate(5, 4)

    def test_exp_form_flagged_float(self):
        agg = bound_aggregate(2, 4)
        assert isinstance(agg.exp_form, float)
        assert isinstance(agg.simple, Fraction)


class TestBoundChain:
    def test_per_degree_below_simple_below_exp_form(self):
        for k in range(4, 61):
            for s in range(2, k // 2 + 1):
                agg = bound_aggregate(s, k)
                assert agg.simple is not None
                assert float(agg.simple) <= agg.exp_form * (1 + 1e-9)
                for i in range(k):
                    assert bound_betti(s, k, i) <= agg.simple
