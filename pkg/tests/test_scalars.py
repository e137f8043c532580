"""Backend arithmetic: canonical forms, exactness, and skew-field laws."""

import pytest
from hypothesis import given

from conftest import nonzero_quaternions, nonzero_rationals, quaternions, rationals
from skewplane.errors import BackendMismatchError, ZeroInverseError
from skewplane.scalars import (
    PrimeField,
    PrimeFieldElement,
    QuaternionField,
    Rational,
    RationalField,
    RationalQuaternion,
    is_prime,
)


class TestRational:
    def test_canonical_form(self):
        assert Rational(2, 4) == Rational(1, 2)
        assert Rational(1, -2) == Rational(-1, 2)
        assert Rational(1, -2).denominator == 2
        assert Rational(0, 7).denominator == 1

    def test_addition_matches_integer_oracle(self):
        # 2/3 + 1/6: numerator 2*6 + 1*3 = 15 over 18, gcd 3 -> 5/6
        assert 2 * 6 + 1 * 3 == 15
        assert Rational(2, 3) + Rational(1, 6) == Rational(15, 18) == Rational(5, 6)

    def test_add_zero_neutral(self):
        a = Rational(-7, 11)
        assert a + Rational(0) == a

    def test_sub_and_neg(self):
        assert -Rational(2, 3) == Rational(-2, 3)
        a = Rational(9, 4)
        assert (a - a).is_zero()

    def test_inverse_multiplies_back_to_one(self):
        a = Rational(2, 3)
        assert a.inverse() == Rational(3, 2)
        assert a * a.inverse() == Rational(1)
        assert Rational(1).inverse() == Rational(1)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroInverseError):
            Rational(0).inverse()

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Rational(0.5)
        with pytest.raises(TypeError):
            Rational(1, 2.0)

    def test_int_coercion(self):
        assert Rational(3) + 1 == Rational(4)
        assert 2 * Rational(1, 2) == Rational(1)
        assert 1 - Rational(1, 3) == Rational(2, 3)


class TestPrimeField:
    def test_product_matches_integer_oracle(self):
        gf5 = PrimeField(5)
        assert (3 * 4) % 5 == 2
        assert gf5.from_int(3) * gf5.from_int(4) == gf5.from_int(2)

    @pytest.mark.parametrize("bad", [-5, 0, 1, 4, 6, 9, 15])
    def test_composite_or_small_moduli_rejected(self, bad):
        with pytest.raises(ValueError):
            PrimeField(bad)

    @pytest.mark.parametrize("p", [2, 3, 5, 13, 97])
    def test_prime_moduli_accepted(self, p):
        assert PrimeField(p).p == p

    def test_exhaustive_inverses_gf7(self):
        gf7 = PrimeField(7)
        one = gf7.one()
        for a in gf7.elements():
            if a.is_zero():
                with pytest.raises(ZeroInverseError):
                    a.inverse()
            else:
                assert a * a.inverse() == one
                assert a.inverse() * a == one

    def test_residue_reduction(self):
        assert PrimeFieldElement(12, 5).residue == 2
        assert PrimeFieldElement(-1, 5).residue == 4

    def test_is_prime_helper(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert is_prime(2 ** 31 - 1)
        assert not is_prime(2 ** 31)


# Hamilton table for the eight signed units, frozen by hand.
_UNIT_PRODUCTS = {
    ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
    ("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
    ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
    ("k", "1"): "k", ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
}


def _unit(name):
    table = {
        "1": RationalQuaternion(1), "i": RationalQuaternion(0, 1),
        "j": RationalQuaternion(0, 0, 1), "k": RationalQuaternion(0, 0, 0, 1),
    }
    if name.startswith("-"):
        return -table[name[1:]]
    return table[name]


class TestQuaternion:
    @pytest.mark.parametrize("left,right", list(_UNIT_PRODUCTS))
    def test_multiplication_table(self, left, right):
        assert _unit(left) * _unit(right) == _unit(_UNIT_PRODUCTS[(left, right)])

    def test_noncommutativity_witness(self):
        i, j, k = _unit("i"), _unit("j"), _unit("k")
        assert i * j == k
        assert j * i == -k
        assert i * j != j * i

    def test_componentwise_add_sub(self):
        i, j = _unit("i"), _unit("j")
        assert i + j == RationalQuaternion(0, 1, 1, 0)
        assert i - j == RationalQuaternion(0, 1, -1, 0)

    def test_inverse_of_i(self):
        i = _unit("i")
        assert i.inverse() == -i
        assert i * i.inverse() == RationalQuaternion(1)

    def test_inverse_exact_rational_components(self):
        from fractions import Fraction

        q = RationalQuaternion(1, 2, Rational(1, 2), 0)
        assert q.norm() == Fraction(21, 4)  # 1 + 4 + 1/4
        assert q * q.inverse() == RationalQuaternion(1)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroInverseError):
            RationalQuaternion(0).inverse()

    def test_norm_zero_iff_zero(self):
        assert RationalQuaternion(0, 0, 0, 0).is_zero()
        assert not RationalQuaternion(0, Rational(1, 7), 0, 0).is_zero()


class TestBackendMismatch:
    def test_rational_vs_quaternion(self):
        with pytest.raises(BackendMismatchError):
            Rational(1) + RationalQuaternion(1)
        with pytest.raises(BackendMismatchError):
            RationalQuaternion(1) * Rational(2)

    def test_different_prime_fields(self):
        with pytest.raises(BackendMismatchError):
            PrimeFieldElement(1, 5) + PrimeFieldElement(1, 7)
        with pytest.raises(BackendMismatchError):
            PrimeFieldElement(1, 5) == PrimeFieldElement(1, 7)

    def test_equality_mismatch_raises(self):
        with pytest.raises(BackendMismatchError):
            Rational(1) == RationalQuaternion(1)


class TestRationalLaws:
    @given(rationals(), rationals(), rationals())
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @given(nonzero_rationals())
    def test_inverse_involution(self, a):
        assert a.inverse().inverse() == a

    @given(nonzero_rationals(), nonzero_rationals())
    def test_no_zero_divisors(self, a, b):
        assert not (a * b).is_zero()


class TestQuaternionLaws:
    @given(quaternions(), quaternions(), quaternions())
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @given(nonzero_quaternions())
    def test_two_sided_inverse_and_involution(self, a):
        one = RationalQuaternion(1)
        assert a * a.inverse() == one
        assert a.inverse() * a == one
        assert a.inverse().inverse() == a

    @given(nonzero_quaternions(), nonzero_quaternions())
    def test_inverse_anti_homomorphism(self, a, b):
        assert (a * b).inverse() == b.inverse() * a.inverse()

    @given(nonzero_quaternions(), nonzero_quaternions())
    def test_no_zero_divisors(self, a, b):
        assert not (a * b).is_zero()

    @given(quaternions(), quaternions())
    def test_conjugation_reverses_products(self, a, b):
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()


class TestFields:
    def test_field_metadata(self):
        assert RationalField().commutative and not RationalField().finite
        assert PrimeField(5).finite and PrimeField(5).commutative
        assert not QuaternionField().commutative

    def test_elements_enumeration(self):
        assert len(list(PrimeField(5).elements())) == 5
        with pytest.raises(TypeError):
            list(RationalField().elements())

    def test_random_nonzero(self, rng):
        field = QuaternionField()
        for _ in range(20):
            assert not field.random_nonzero(rng).is_zero()
