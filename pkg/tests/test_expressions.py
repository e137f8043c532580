"""Expression grammar: parsing, printing, round trips and evaluation."""

import random

import pytest

from skewplane.errors import (
    ExpressionSyntaxError,
    SingularCrossRatioError,
    ZeroInverseError,
)
from skewplane.expressions import (
    Add,
    CrossRatioNode,
    Inv,
    Literal,
    MapNode,
    Mul,
    Neg,
    Ratio2,
    Ratio3,
    Sub,
    evaluate_expression,
    parse_expression,
    parse_point,
    parse_scalar,
    parse_scalar_list,
    print_expression,
    random_expression,
)
from skewplane.maps import Family
from skewplane.plane import PlanePoint
from skewplane.scalars import (
    PrimeField,
    QuaternionField,
    Rational,
    RationalField,
    RationalQuaternion,
)

RATIONAL = RationalField()
GF5 = PrimeField(5)
QUAT = QuaternionField()


class TestParsing:
    def test_cross_ratio_call(self):
        node = parse_expression("cr(2,3;1,5)", RATIONAL)
        assert node == CrossRatioNode(Literal(Rational(2)), Literal(Rational(3)),
                                      Literal(Rational(1)), Literal(Rational(5)))

    def test_ratio2_call(self):
        assert parse_expression("r(6:3)", RATIONAL) == Ratio2(
            Literal(Rational(6)), Literal(Rational(3)))

    def test_ratio3_call(self):
        assert parse_expression("r(5,3;1)", RATIONAL) == Ratio3(
            Literal(Rational(5)), Literal(Rational(3)), Literal(Rational(1)))

    def test_map_call(self):
        node = parse_expression("map(A; 3,1,5; 2)", RATIONAL)
        assert node == MapNode(Family.A, Literal(Rational(3)), Literal(Rational(1)),
                               Literal(Rational(5)), Literal(Rational(2)))

    def test_unbalanced_input_reports_offset(self):
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_expression("cr(2,3;1", RATIONAL)
        assert excinfo.value.position == 8

    def test_unknown_character_reports_offset(self):
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_expression("2 + $", RATIONAL)
        assert excinfo.value.position == 4

    def test_trailing_input_rejected(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("2 3", RATIONAL)

    def test_precedence_and_left_association(self):
        two, three, four = (Literal(Rational(n)) for n in (2, 3, 4))
        assert parse_expression("2*3*4", RATIONAL) == Mul(Mul(two, three), four)
        assert parse_expression("2+3*4", RATIONAL) == Add(two, Mul(three, four))
        assert parse_expression("2-3-4", RATIONAL) == Sub(Sub(two, three), four)

    def test_postfix_inverse(self):
        assert parse_expression("(2/3)^-1", RATIONAL) == Inv(Literal(Rational(2, 3)))
        assert parse_expression("2^-1^-1", RATIONAL) == Inv(Inv(Literal(Rational(2))))

    def test_caret_requires_minus_one(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("2^3", RATIONAL)

    def test_negative_literal_folding(self):
        assert parse_expression("-2/3", RATIONAL) == Literal(Rational(-2, 3))
        assert parse_expression("-(2/3)", RATIONAL) == Neg(Literal(Rational(2, 3)))

    def test_unary_minus_on_composite(self):
        node = parse_expression("-(1 + 2)", RATIONAL)
        assert node == Neg(Add(Literal(Rational(1)), Literal(Rational(2))))


class TestLiterals:
    def test_rational_forms(self):
        assert parse_scalar("7", RATIONAL) == Rational(7)
        assert parse_scalar("-7", RATIONAL) == Rational(-7)
        assert parse_scalar("2/4", RATIONAL) == Rational(1, 2)

    def test_prime_field_literal(self):
        assert parse_scalar("3 mod 5", GF5) == GF5.from_int(3)

    def test_prime_field_modulus_mismatch(self):
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_scalar("3 mod 7", GF5)
        assert "does not match backend" in str(excinfo.value)

    def test_prime_field_literal_requires_mod(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("3 + 1", GF5)

    def test_quaternion_literal(self):
        assert parse_scalar("(1/2,-2,0,1)", QUAT) == RationalQuaternion(
            Rational(1, 2), Rational(-2), Rational(0), Rational(1))

    def test_quaternion_literal_vs_parenthesized_expression(self):
        # "(...)" with four components is a literal; with one expression
        # it is grouping
        literal = parse_expression("(0,1,0,0)", QUAT)
        assert literal == Literal(QUAT.i())
        grouped = parse_expression("((0,1,0,0))", QUAT)
        assert grouped == Literal(QUAT.i())

    def test_bare_integer_is_not_a_quaternion_literal(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("3", QUAT)

    def test_point_literal(self):
        assert parse_point("(2, 1)", RATIONAL) == PlanePoint(Rational(2), Rational(1))
        point = parse_point("((0,1,0,0), (1,0,0,0))", QUAT)
        assert point == PlanePoint(QUAT.i(), QUAT.one())

    def test_scalar_list(self):
        assert parse_scalar_list("3,1,5", RATIONAL) == (
            Rational(3), Rational(1), Rational(5))
        assert parse_scalar_list("(0,1,0,0),(0,0,1,0)", QUAT) == (QUAT.i(), QUAT.j())


class TestEvaluation:
    def test_worked_cross_ratio(self):
        node = parse_expression("cr(2,3;1,5)", RATIONAL)
        assert evaluate_expression(node) == Rational(1, 3)

    def test_map_matches_direct_cross_ratio(self):
        direct = evaluate_expression(parse_expression("cr(2,3;1,5)", RATIONAL))
        mapped = evaluate_expression(parse_expression("map(A; 3,1,5; 2)", RATIONAL))
        assert direct == mapped

    def test_singular_input_propagates(self):
        with pytest.raises(SingularCrossRatioError):
            evaluate_expression(parse_expression("cr(2,3;3,5)", RATIONAL))
        with pytest.raises(ZeroInverseError):
            evaluate_expression(parse_expression("(1 - 1)^-1", RATIONAL))

    def test_noncommutative_product_order(self):
        ij = evaluate_expression(parse_expression("(0,1,0,0)*(0,0,1,0)", QUAT))
        ji = evaluate_expression(parse_expression("(0,0,1,0)*(0,1,0,0)", QUAT))
        assert ij == QUAT.k()
        assert ji == -QUAT.k()


class TestRoundTrip:
    @pytest.mark.parametrize("field", [RATIONAL, GF5, QUAT], ids=lambda f: f.name)
    def test_generated_asts_round_trip(self, field):
        rng = random.Random(99)
        for _ in range(60):
            node = random_expression(field, rng)
            text = print_expression(node)
            assert parse_expression(text, field) == node, text

    def test_negative_literal_round_trip(self):
        node = Literal(Rational(-2, 3))
        assert parse_expression(print_expression(node), RATIONAL) == node

    def test_neg_wrapper_round_trip(self):
        node = Neg(Literal(Rational(2, 3)))
        assert parse_expression(print_expression(node), RATIONAL) == node

    def test_cli_equivalence_of_eval(self, rng):
        # expression evaluation through the CLI equals the core API
        from skewplane.cli import main

        for field in (RATIONAL, GF5, QUAT):
            for _ in range(67):
                node = random_expression(field, rng)
                text = print_expression(node)
                try:
                    expected = str(evaluate_expression(node))
                    expected_code = 0
                except Exception as exc:  # singular inputs exit with 3
                    expected = type(exc).__name__
                    expected_code = 3
                import io
                import contextlib

                out = io.StringIO()
                err = io.StringIO()
                with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
                    # "--" keeps expressions with a leading minus out of
                    # argparse's option handling
                    code = main(["eval", "--backend", field.name, "--", text])
                assert code == expected_code, text
                if expected_code == 0:
                    assert out.getvalue().strip() == expected
                else:
                    assert expected in err.getvalue()
