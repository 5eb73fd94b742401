"""
标量域：公理抽查、Frobenius、平方根、序列化与嵌入
"""

import random
from fractions import Fraction

import pytest

from core.algebra.fields import (
    RATIONALS,
    ExtensionField,
    PrimeField,
    ext_field,
    extend_for_size,
    field_from_json,
    prime_field,
)
from core.errors import FieldError


def test_field_axioms(any_field, rng):
    f = any_field
    for _ in range(200):
        a, b, c = (f.random_element(rng) for _ in range(3))
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, f.neg(a)) == f.zero
        assert f.sub(a, b) == f.add(a, f.neg(b))
        if a:
            assert f.mul(a, f.inv(a)) == f.one
            assert f.div(b, a) == f.mul(b, f.inv(a))


def test_pow_matches_repeated_multiplication(any_field, rng):
    f = any_field
    a = f.random_nonzero(rng)
    acc = f.one
    for e in range(7):
        assert f.pow(a, e) == acc
        acc = f.mul(acc, a)
    assert f.mul(f.pow(a, -3), f.pow(a, 3)) == f.one


def test_extension_field_shape(f29sq):
    assert isinstance(f29sq, ExtensionField)
    assert f29sq.order == 841
    assert len(list(f29sq.elements())) == 841
    assert repr(f29sq) == "F_29^2"


def test_frobenius_has_order_k(f29sq, rng):
    for _ in range(50):
        a = f29sq.random_element(rng)
        assert f29sq.frobenius(f29sq.frobenius(a)) == a
        assert f29sq.pow(a, 29 ** 2) == a


def test_prime_subfield_is_fixed_by_frobenius(f29sq):
    for a in range(29):
        assert f29sq.in_prime_subfield(a)
        assert f29sq.frobenius(a) == a


@pytest.mark.parametrize("field", [prime_field(29), prime_field(101), ext_field(29, 2)])
def test_sqrt_of_squares(field):
    rng = random.Random("sqrt")
    for _ in range(100):
        a = field.random_element(rng)
        sq = field.mul(a, a)
        assert field.is_square(sq)
        r = field.sqrt(sq)
        assert r is not None
        assert field.mul(r, r) == sq


def test_every_prime_element_is_square_in_quadratic_extension(f29sq):
    for a in range(29):
        assert f29sq.is_square(a)


def test_non_residue_has_no_root(f29):
    non_residues = [a for a in range(1, 29) if not f29.is_square(a)]
    assert len(non_residues) == 14
    assert f29.sqrt(non_residues[0]) is None


@pytest.mark.parametrize("field", [RATIONALS, prime_field(29), ext_field(29, 2), ext_field(5, 3)])
def test_field_json_round_trip(field):
    assert field_from_json(field.to_json()) == field


def test_scalar_json_round_trip(any_field, rng):
    for _ in range(20):
        a = any_field.random_element(rng)
        assert any_field.scalar_from_json(any_field.scalar_to_json(a)) == a


def test_field_json_shapes():
    assert RATIONALS.to_json() == {"p": 0, "k": 1}
    assert prime_field(7).to_json() == {"p": 7, "k": 1}
    obj = ext_field(29, 2).to_json()
    assert obj["p"] == 29 and obj["k"] == 2
    assert len(obj["min_poly"]) == 3 and obj["min_poly"][-1] == 1


def test_ext_field_is_deterministic():
    assert ext_field(29, 2, seed=3).to_json() == ext_field(29, 2, seed=3).to_json()
    assert isinstance(ext_field(29, 1), PrimeField)


@pytest.mark.parametrize("p,k", [(15, 1), (1, 1), (29, 0)])
def test_bad_field_parameters(p, k):
    with pytest.raises(FieldError):
        ext_field(p, k)


def test_extend_for_size():
    assert extend_for_size(prime_field(29), 101).order == 841
    assert extend_for_size(prime_field(101), 101).order == 101
    assert extend_for_size(prime_field(5), 101).order == 125
    assert extend_for_size(RATIONALS, 101) is RATIONALS


def test_extend_for_size_refuses_extension_fields():
    with pytest.raises(FieldError):
        extend_for_size(ext_field(3, 2), 101)


def test_rational_reduction(f29):
    assert RATIONALS.embed(Fraction(1, 2), f29) == 15
    assert RATIONALS.embed(Fraction(-3), f29) == 26
    with pytest.raises(FieldError):
        RATIONALS.embed(Fraction(1, 29), f29)


def test_prime_field_embeds_into_extension(f29, f29sq):
    for a in (0, 1, 17, 28):
        b = f29.embed(a, f29sq)
        assert f29sq.in_prime_subfield(b)
    assert f29sq.mul(f29.embed(3, f29sq), f29.embed(5, f29sq)) == f29.embed(15, f29sq)


def test_no_embedding_across_characteristics():
    with pytest.raises(FieldError):
        prime_field(29).embed(1, prime_field(31))


def test_coerce_fraction(f101):
    assert f101.mul(f101.coerce(Fraction(1, 3)), 3) == 1


def test_normalize_projective_vector(f29):
    assert f29.normalize((0, 2, 4)) == (0, 1, 2)
    assert f29.normalize((0, 0, 0)) == (0, 0, 0)


def test_rationals_cannot_be_enumerated():
    with pytest.raises(FieldError):
        RATIONALS.elements()
