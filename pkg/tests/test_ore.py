import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import naive_mul, random_nonzero_weyl, weyl_elements
from weyldet import (
    BoundExceeded,
    IndexMismatch,
    OreSearchConfig,
    WeylElement,
    ZeroInput,
    bernstein_degree,
    left_ore_pair,
    parse_weyl_expr,
)
from weyldet.ore import default_config, sufficient_bound


def e(text, m=1):
    return parse_weyl_expr(text, m)


class TestExamples:
    def test_d_and_x(self):
        pair = left_ore_pair(e("d1"), e("x1"))
        assert pair.u == e("x1^2")
        assert pair.v == e("x1*d1 - 1")
        assert pair.common_multiple == e("x1^2*d1")

    def test_d_and_x_by_repeated_swaps(self):
        # independent expansion of v*x1 and u*d1
        assert naive_mul(e("x1*d1 - 1"), e("x1")) == e("x1^2*d1")
        assert naive_mul(e("x1^2"), e("d1")) == e("x1^2*d1")

    def test_equal_inputs(self):
        a = e("x1*d1 + d1^2 - 3")
        pair = left_ore_pair(a, a)
        assert pair.u == 1 and pair.v == 1

    def test_commutative_case(self):
        pair = left_ore_pair(e("x1^2"), e("x1"))
        assert pair.u == 1 and pair.v == e("x1")

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            left_ore_pair(WeylElement.zero(1), e("x1"))
        with pytest.raises(ZeroInput):
            left_ore_pair(e("x1"), WeylElement.zero(1))

    def test_index_mismatch(self):
        with pytest.raises(IndexMismatch):
            left_ore_pair(e("x1"), e("x1", 2))

    def test_bound_exceeded(self):
        with pytest.raises(BoundExceeded):
            left_ore_pair(e("d1"), e("x1"), OreSearchConfig(1, 1, 1))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            OreSearchConfig(3, 2, 1)
        with pytest.raises(ValueError):
            OreSearchConfig(0, 2, 0)

    def test_backends_agree(self):
        rng = random.Random(5)
        for _ in range(10):
            a = random_nonzero_weyl(rng, 1, 2)
            b = random_nonzero_weyl(rng, 1, 2)
            p1 = left_ore_pair(a, b, backend="python")
            p2 = left_ore_pair(a, b, backend="flint")
            assert (p1.u, p1.v) == (p2.u, p2.v)


class TestBounds:
    def test_sufficient_bound_is_a_dimension_count(self):
        from math import comb

        for m in (1, 2):
            for da in range(4):
                for db in range(4):
                    d = sufficient_bound(m, da, db)
                    N = lambda k: comb(k + 2 * m, 2 * m)
                    assert N(d) + N(d + da - db) > N(d + da)
                    if d > max(da, db):
                        assert N(d - 1) + N(d - 1 + da - db) <= N(d - 1 + da)

    def test_default_config(self):
        a, b = e("d1^2 + x1"), e("x1")
        cfg = default_config(a, b)
        assert cfg.initial_bound == 2
        assert cfg.bound_step == 1
        assert cfg.max_bound >= cfg.initial_bound + 12

    def test_found_degree_never_exceeds_dimension_bound(self):
        rng = random.Random(3)
        for _ in range(20):
            a = random_nonzero_weyl(rng, 1, 3, density=0.6)
            b = random_nonzero_weyl(rng, 1, 3, density=0.6)
            pair = left_ore_pair(a, b)
            assert bernstein_degree(pair.u) <= sufficient_bound(
                1, bernstein_degree(a), bernstein_degree(b)
            )


class TestInvariants:
    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_identity_holds(self, data):
        m = data.draw(st.integers(1, 2))
        a = data.draw(weyl_elements(m=m, max_degree=2, max_terms=3, nonzero=True))
        b = data.draw(weyl_elements(m=m, max_degree=2, max_terms=3, nonzero=True))
        pair = left_ore_pair(a, b)
        assert pair.u * a == pair.v * b == pair.common_multiple
        assert pair.u and pair.v
        assert pair.u.leading_coefficient() == 1

    def test_deterministic(self):
        a, b = e("d1^2 + x1*d1 + 2"), e("x1^2 - d1")
        first = left_ore_pair(a, b)
        for _ in range(3):
            again = left_ore_pair(a, b)
            assert (again.u, again.v) == (first.u, first.v)

    def test_minimal_degree(self):
        # no solution exists one degree below the one returned
        a, b = e("d1^2 + x1"), e("x1*d1 + 1")
        pair = left_ore_pair(a, b)
        d = bernstein_degree(pair.u)
        with pytest.raises(BoundExceeded):
            left_ore_pair(a, b, OreSearchConfig(d - 1, d - 1, 1))

    @settings(max_examples=25, deadline=None)
    @given(weyl_elements(m=1, max_degree=2, nonzero=True),
           weyl_elements(m=1, max_degree=2, nonzero=True),
           st.fractions(min_value=-7, max_value=7).filter(bool))
    def test_scaling(self, a, b, c):
        pair = left_ore_pair(a.scale(c), b)
        assert pair.u * a.scale(c) == pair.v * b
