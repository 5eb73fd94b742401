"""
齐次多项式、射影点枚举与插值
"""

import random
from fractions import Fraction

import pytest

from core.algebra.fields import RATIONALS, ext_field, prime_field
from core.algebra.interpolation import interpolate, interpolate_function, sample_count
from core.algebra.polynomials import (
    MultiPoly,
    forms_span_contains,
    monomials,
    upoly_gcd,
    upoly_roots,
)
from core.algebra.projective import projective_points, projective_size
from core.errors import DimensionError, DivisionError, InterpolationError, SingularSampleError


def random_form(field, n, d, rng):
    return MultiPoly.from_vector(field, n, d, [field.random_element(rng) for _ in monomials(n, d)])


def test_monomial_count():
    assert len(monomials(6, 3)) == 56
    assert len(monomials(6, 6)) == 462
    assert sample_count(3, 7) == 36
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))


def test_exponents_must_match_degree(f29):
    with pytest.raises(DimensionError):
        MultiPoly(f29, 3, 2, {(1, 0, 0): 1})


def test_zero_coefficients_are_dropped(f29):
    p = MultiPoly(f29, 2, 1, {(1, 0): 0, (0, 1): 3})
    assert p.terms == {(0, 1): 3}


def test_evaluate_product_and_sum(any_field, rng):
    a = random_form(any_field, 3, 2, rng)
    b = random_form(any_field, 3, 1, rng)
    for _ in range(10):
        pt = tuple(any_field.random_element(rng) for _ in range(3))
        assert (a * b).evaluate(pt) == any_field.mul(a.evaluate(pt), b.evaluate(pt))
        assert (a + a).evaluate(pt) == any_field.add(a.evaluate(pt), a.evaluate(pt))


def test_homogeneity(any_field, rng):
    a = random_form(any_field, 4, 3, rng)
    pt = tuple(any_field.random_element(rng) for _ in range(4))
    lam = any_field.random_nonzero(rng)
    scaled = tuple(any_field.mul(lam, x) for x in pt)
    assert a.evaluate(scaled) == any_field.mul(any_field.pow(lam, 3), a.evaluate(pt))


def test_euler_identity(f101, rng):
    a = random_form(f101, 4, 3, rng)
    pt = tuple(f101.random_element(rng) for _ in range(4))
    total = 0
    for i, g in enumerate(a.gradient()):
        total = f101.add(total, f101.mul(pt[i], g.evaluate(pt)))
    assert total == f101.mul(3, a.evaluate(pt))


def test_partial_vanishes_in_characteristic(f29):
    x0 = MultiPoly.variable(f29, 2, 0)
    assert x0.power(29).partial(0).is_zero()


def test_compose_rows_restricts_to_subspace(f29, rng):
    a = random_form(f29, 6, 3, rng)
    rows = [[f29.random_element(rng) for _ in range(6)] for _ in range(3)]
    restricted = a.compose_rows(rows)
    assert restricted.n == 3 and restricted.d == 3
    s = (2, 5, 7)
    v = [sum(s[j] * rows[j][i] for j in range(3)) % 29 for i in range(6)]
    assert restricted.evaluate(s) == a.evaluate(v)


def test_divide_exact(f29, rng):
    a = random_form(f29, 3, 2, rng)
    g = MultiPoly.variable(f29, 3, 1).power(4)
    assert (a * g).divide_exact(g) == a


def test_divide_exact_rejects_remainder(f29):
    a = MultiPoly.from_ints(f29, 2, {(2, 0): 1, (1, 1): 1})
    with pytest.raises(DivisionError):
        a.divide_exact(MultiPoly.variable(f29, 2, 1))


def test_normalize_and_proportional(f29sq, rng):
    a = random_form(f29sq, 3, 2, rng)
    lam = f29sq.random_nonzero(rng)
    b = a.scale(lam)
    assert b.proportional_to(a) == lam
    assert a.normalize()[0] == b.normalize()[0]


def test_proportional_to_rejects_different_support(f29):
    a = MultiPoly.from_ints(f29, 2, {(1, 0): 1})
    b = MultiPoly.from_ints(f29, 2, {(0, 1): 1})
    assert a.proportional_to(b) is None


def test_json_round_trip(any_field, rng):
    a = random_form(any_field, 3, 3, rng)
    assert MultiPoly.from_json(any_field, a.to_json()) == a


def test_rational_coefficients():
    a = MultiPoly.from_ints(RATIONALS, 2, {(1, 0): Fraction(1, 2), (0, 1): -3})
    assert a.evaluate((Fraction(2), Fraction(1))) == Fraction(-2)


def test_map_coefficients_embeds(f29, f29sq, rng):
    a = random_form(f29, 3, 2, rng)
    b = a.map_coefficients(lambda c: f29.embed(c, f29sq), f29sq)
    pt = (1, 2, 3)
    assert b.evaluate(pt) == f29.embed(a.evaluate(pt), f29sq)


def test_forms_span_contains(f29, rng):
    basis = [random_form(f29, 3, 2, rng) for _ in range(2)]
    combo = basis[0].scale(3) + basis[1].scale(5)
    assert forms_span_contains(f29, basis, combo)
    assert not forms_span_contains(f29, [MultiPoly.variable(f29, 3, 0).power(2)],
                                   MultiPoly.variable(f29, 3, 1).power(2))


def test_univariate_roots(f29):
    # (x - 3)(x - 5)(x - 7)
    f = [(-3 * 5 * 7) % 29, (3 * 5 + 3 * 7 + 5 * 7) % 29, (-(3 + 5 + 7)) % 29, 1]
    assert sorted(upoly_roots(f29, f)) == [3, 5, 7]
    assert upoly_roots(f29, [1, 0, 1]) == [12, 17]
    assert upoly_gcd(f29, f, [(-3) % 29, 1]) == [(-3) % 29, 1]


# ==================== 射影点 ====================

@pytest.mark.parametrize("q,n", [(2, 2), (3, 2), (5, 3), (4, 2)])
def test_projective_count(q, n):
    field = ext_field(2, 2) if q == 4 else prime_field(q)
    points = list(projective_points(field, n))
    assert len(points) == projective_size(q, n)
    assert len(set(points)) == len(points)
    assert all(field.normalize(pt) == pt for pt in points)


def test_projective_size():
    assert projective_size(5, 5) == 3906
    assert projective_size(29, 2) == 871


# ==================== 插值 ====================

def test_interpolation_recovers_form():
    field = prime_field(1009)
    rng = random.Random("interp")
    target = random_form(field, 3, 4, rng)
    assert interpolate_function(field, 3, 4, target.evaluate, rng) == target


def test_interpolation_over_extension(f29sq):
    rng = random.Random("interp-ext")
    target = random_form(f29sq, 3, 3, rng)
    assert interpolate_function(f29sq, 3, 3, target.evaluate, rng) == target


def test_interpolation_detects_non_form():
    field = prime_field(1009)
    rng = random.Random("interp-bad")
    target = random_form(field, 3, 3, rng)
    with pytest.raises(InterpolationError):
        # 三次函数不是二次型
        interpolate_function(field, 3, 2, target.evaluate, rng)


def test_interpolation_needs_enough_samples(f29):
    with pytest.raises(InterpolationError):
        interpolate(f29, 3, 2, [((1, 0, 0), 1)], [((0, 1, 0), 1)])


def test_interpolation_requires_holdout(f29):
    rng = random.Random("interp-holdout")
    target = random_form(f29, 2, 2, rng)
    samples = [(pt, target.evaluate(pt)) for pt in [(1, 0), (0, 1), (1, 1)]]
    with pytest.raises(InterpolationError, match="held-out"):
        interpolate(f29, 2, 2, samples, [])
    with pytest.raises(InterpolationError, match="held-out"):
        interpolate_function(f29, 2, 2, target.evaluate, rng, holdout=0)


def test_interpolation_holdout_mismatch(f29):
    target = MultiPoly.from_vector(f29, 2, 1, [1, 2])
    samples = [(pt, target.evaluate(pt)) for pt in [(1, 0), (0, 1)]]
    with pytest.raises(InterpolationError, match="mismatch"):
        interpolate(f29, 2, 1, samples, [((1, 1), 0)])


def test_interpolation_repeated_samples_are_singular(f29):
    # 重复点：秩不足
    samples = [((1, 2), 5)] * 3
    with pytest.raises(SingularSampleError):
        interpolate(f29, 2, 2, samples, [((1, 2), 5)])


def test_interpolation_redraws_after_singular_samples():
    field = prime_field(101)
    rng = random.Random("interp-redraw")
    target = random_form(field, 2, 3, rng)
    need = sample_count(2, 3)
    calls = {"n": 0}

    def sampler(r):
        calls["n"] += 1
        # 第一轮所有样本都落在同一个点上
        if calls["n"] <= need:
            return (field.one, field.one)
        return (field.one, r.randrange(field.p))

    assert interpolate_function(field, 2, 3, target.evaluate, rng, holdout=5, sampler=sampler) == target
    assert calls["n"] > need + 5


def test_interpolation_gives_up_after_attempts(f29):
    with pytest.raises(SingularSampleError):
        interpolate_function(f29, 2, 2, lambda pt: 0, random.Random(0),
                             sampler=lambda r: (1, 1), attempts=2)



def test_interpolation_needs_large_field():
    with pytest.raises(InterpolationError):
        interpolate_function(prime_field(3), 3, 3, lambda pt: 0, random.Random(0))
