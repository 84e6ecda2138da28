import math
from fractions import Fraction

import pytest

from panint import RealFunction, gen_capacity, pan_pos
from panint.core import close
from panint.generators import make_rng, random_signed
from panint.lpspace import (
    BadExponent,
    NormParams,
    NotSubadditive,
    cauchy_distances,
    distance,
    ess_sup,
    holder_check,
    metric_axioms_check,
    minkowski_check,
    p_norm,
)

from conftest import table_capacity

F = Fraction


class TestNormParams:
    def test_conjugates(self):
        assert NormParams.from_p(2).q == 2
        assert NormParams.from_p(1).q == math.inf
        assert close(NormParams.from_p(1.5).q, 3.0)

    @pytest.mark.parametrize("p,q", [(0.5, 2), (2, 3), (1, 2)])
    def test_bad(self, p, q):
        with pytest.raises(BadExponent):
            NormParams(p, q)

    def test_bad_p(self, golden):
        mu, f = golden
        with pytest.raises(BadExponent):
            p_norm(f, mu, 0.5)


class TestNorm:
    def test_zero(self, golden):
        mu, _ = golden
        assert p_norm(RealFunction.zeros(mu.space), mu, 1) == 0
        assert p_norm(RealFunction.zeros(mu.space), mu, 2) == 0.0

    def test_example_p1(self, golden):
        mu, f = golden
        expect = pan_pos(RealFunction(mu.space, (F(2), F(2), F(1), F(1))), mu).value
        assert p_norm(f, mu, 1) == expect == 8

    @pytest.mark.parametrize("p", [1, 1.5, 2, 3])
    def test_indicator_supermodular(self, p):
        # mu(A) = |A|^2: the single block is the best partition of X
        mu = table_capacity(4, [bin(s).count("1") ** 2 for s in range(1, 16)])
        one = RealFunction.indicator(mu.space, mu.space.full)
        assert close(float(p_norm(one, mu, p)), 16 ** (1 / p))

    @pytest.mark.parametrize("p", [1, 1.5, 2, 3])
    def test_indicator_subadditive(self, p):
        # singletons are the best partition, so the norm is (sum mu({x}))^(1/p)
        mu = gen_capacity(5, seed=2, family="clipped-additive", exact=True)
        one = RealFunction.indicator(mu.space, mu.space.full)
        singles = sum(mu[1 << i] for i in range(5))
        assert close(float(p_norm(one, mu, p)), float(singles) ** (1 / p))

    def test_exactness_by_p(self, golden):
        mu, f = golden
        assert isinstance(p_norm(f, mu, 1), Fraction)
        assert isinstance(p_norm(f, mu, 2), float)
        assert isinstance(p_norm(f, mu, 1.5), float)

    def test_p2_value(self, golden):
        mu, f = golden
        sq = pan_pos(RealFunction(mu.space, (F(4), F(4), F(1), F(1))), mu).value
        assert close(p_norm(f, mu, 2), math.sqrt(sq))


class TestDistance:
    def test_self(self, golden):
        mu, f = golden
        assert distance(f, f, mu, 1) == 0

    def test_null_point(self):
        # x3 carries no mass anywhere
        mu = table_capacity(3, [1, 1, 2, 0, 1, 1, 2])
        f = RealFunction(mu.space, (F(1), F(2), F(3)))
        g = RealFunction(mu.space, (F(1), F(2), F(-9)))
        assert mu.is_null(f.differs_on(g))
        assert distance(f, g, mu, 1) == 0
        assert distance(f, g, mu, 2) == 0.0

    def test_cauchy_sequence(self):
        mu = gen_capacity(4, seed=5, family="concave-distortion", exact=True)
        f = random_signed(make_rng(5), mu.space, exact=True)
        d = cauchy_distances(f, mu, 1, k_max=20)
        assert all(a >= b for a, b in zip(d, d[1:]))
        assert d[-1] == p_norm(f, mu, 1) / 2**20

    def test_ess_sup(self):
        mu = table_capacity(3, [1, 1, 2, 0, 1, 1, 2])
        f = RealFunction(mu.space, (F(1), F(-2), F(30)))
        assert ess_sup(f, mu) == 2


class TestInequalities:
    def test_cauchy_schwarz_case(self):
        mu = gen_capacity(5, seed=9, family="min-of-additive", exact=False)
        f = random_signed(make_rng(9), mu.space)
        one = RealFunction.indicator(mu.space, mu.space.full, exact=False)
        rep = holder_check(f, one, mu, 2, 2)
        assert rep.holds and not rep.advisory
        singles = sum(mu[1 << i] for i in range(5))
        assert close(rep.rhs, p_norm(f, mu, 2) * math.sqrt(singles))

    def test_zero(self, golden):
        mu, _ = golden
        z = RealFunction.zeros(mu.space)
        assert holder_check(z, z, mu, 2).lhs == 0
        assert minkowski_check(z, z, mu, 2).holds

    def test_advisory_flag(self, golden):
        mu, f = golden
        assert holder_check(f, f, mu, 2).advisory
        assert minkowski_check(f, f, mu, 1).advisory

    @pytest.mark.parametrize("p", [1, 1.5, 2, 3])
    def test_random_subadditive(self, p):
        for seed in range(15):
            mu = gen_capacity(2 + seed % 5, seed=seed, family="clipped-additive", exact=False)
            rng = make_rng(seed)
            f, g = random_signed(rng, mu.space), random_signed(rng, mu.space)
            assert holder_check(f, g, mu, p).holds
            assert minkowski_check(f, g, mu, p).holds

    def test_holder_p1_exact(self, additive4):
        f = RealFunction(additive4.space, (F(1), F(-2), F(3), F(0)))
        g = RealFunction(additive4.space, (F(2), F(2), F(-1), F(5)))
        rep = holder_check(f, g, additive4, 1)
        assert rep.lhs == 1 * 2 + 2 * 4 + 3 * 3 and rep.rhs == (1 + 4 + 9) * 5


class TestMetricAxioms:
    def test_additive(self, additive4):
        assert metric_axioms_check(additive4, 1, 50, seed=0).ok

    @pytest.mark.parametrize("p", [1, 2])
    def test_clipped_additive(self, p):
        mu = gen_capacity(5, seed=4, family="clipped-additive", exact=False)
        assert metric_axioms_check(mu, p, 200, seed=1).ok

    def test_with_null_sets(self):
        mu = table_capacity(3, [1, 1, 2, 0, 1, 1, 2])
        rep = metric_axioms_check(mu, 1, 100, seed=3)
        assert rep.ok and rep.exact

    def test_rejects_non_subadditive(self, golden):
        mu, _ = golden
        with pytest.raises(NotSubadditive):
            metric_axioms_check(mu, 1, 10, seed=0)
