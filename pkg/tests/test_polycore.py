import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycore.field import CoefficientField, FieldError, parse_field
from polycore.monomials import Comparison, MonomialOrder, compare
from polycore.parser import ParseError, parse_polynomial
from polycore.point import Point
from polycore.polynomial import add, evaluate, mul, partial_derivative
from polycore.variables import PolynomialError, VariableSet
from tests.strategies import F101, XYZ, points, polynomials

R2_VARS = VariableSet(("x11", "x12", "x21", "x22", "y11", "y12", "y21", "y22"))


class TestField:
    @pytest.mark.parametrize("descriptor,expected", [
        ("q", CoefficientField.rationals()),
        ("QQ", CoefficientField.rationals()),
        ("fp:101", CoefficientField.prime(101)),
        ("fp", CoefficientField.prime(32003)),
    ])
    def test_parse_field(self, descriptor, expected):
        assert parse_field(descriptor, 32003) == expected

    @pytest.mark.parametrize("descriptor", ["fp:4", "fp:2", "fp:x", "reals", ""])
    def test_parse_field_rejects(self, descriptor):
        with pytest.raises(FieldError):
            parse_field(descriptor, 32003)

    def test_denominator_divisible_by_p(self):
        with pytest.raises(FieldError) as e:
            CoefficientField.prime(7).from_fraction(1, 14)
        assert e.value.code == "NOT_REPRESENTABLE"

    def test_symmetric_residues(self):
        F = CoefficientField.prime(7)
        assert F.format(F.from_int(-1)) == "-1"
        assert F.format(F.from_int(3)) == "3"

    def test_rational_format(self, rationals):
        assert rationals.format(rationals.convert("6/4")) == "3/2"

    def test_inverse_of_zero(self, fp):
        with pytest.raises(FieldError) as e:
            fp.inv(0)
        assert e.value.code == "ZERO_DIVISION"


class TestParser:
    def test_commutator_entry(self):
        f = parse_polynomial("x12*y21 - y12*x21", R2_VARS, CoefficientField.rationals())
        assert len(f.terms()) == 2
        assert f.coefficient(R2_VARS.unit("x12")[:4] + R2_VARS.unit("y21")[4:]) == 1

    @pytest.mark.parametrize("text", ["0", "x^2 - x^2", "(x + y)*(x - y) - x^2 + y^2"])
    def test_cancels_to_zero(self, text, poly):
        assert poly(text, "x y").is_zero()

    def test_rational_coefficients(self, poly):
        f = poly("x/2 + x/2", "x y")
        assert f == poly("x", "x y")

    @pytest.mark.parametrize("text,column", [
        ("x + * y", 5),
        ("x y", 3),
        ("x + $", 5),
        ("(x + y", 7),
    ])
    def test_syntax_error_position(self, text, column, poly):
        with pytest.raises(ParseError) as e:
            poly(text, "x y")
        assert e.value.column == column

    def test_unknown_variable(self, poly):
        with pytest.raises(ParseError) as e:
            poly("x + w", "x y")
        assert e.value.code == "UNKNOWN_VARIABLE"

    def test_p_divides_denominator(self, poly):
        with pytest.raises(ParseError) as e:
            poly("x/7", "x y", CoefficientField.prime(7))
        assert e.value.code == "NOT_REPRESENTABLE"

    def test_division_by_variable(self, poly):
        with pytest.raises(ParseError):
            poly("x/y", "x y")

    def test_chained_exponent(self, poly):
        with pytest.raises(ParseError):
            poly("x^2^3", "x y")

    @given(polynomials())
    @settings(deadline=None)
    def test_printed_form_parses_back(self, f):
        assert parse_polynomial(str(f), f.vars, f.field) == f


class TestArithmetic:
    def test_examples(self, poly):
        x_plus_y, x_minus_y = poly("x + y", "x y"), poly("x - y", "x y")
        assert add(x_plus_y, x_minus_y) == poly("2*x", "x y")
        assert mul(x_plus_y, x_minus_y) == poly("x^2 - y^2", "x y")
        assert (x_plus_y * 0).is_zero()

    def test_mismatched_rings(self, poly):
        with pytest.raises(PolynomialError) as e:
            poly("x", "x y") + poly("x", "x z")
        assert e.value.code == "MISMATCH"

    def test_mismatched_fields(self, poly):
        with pytest.raises(PolynomialError):
            poly("x", "x y") * poly("x", "x y", CoefficientField.prime(5))

    def test_negative_exponent(self, poly):
        with pytest.raises(PolynomialError):
            poly("x", "x y") ** -1

    @given(polynomials(), polynomials(), polynomials())
    @settings(deadline=None, max_examples=50)
    def test_ring_axioms(self, f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f - f).is_zero()


class TestDerivativeAndEvaluation:
    def test_derivatives(self, poly):
        assert partial_derivative(poly("x^2*y + y", "x y"), "x") == poly("2*x*y", "x y")
        assert partial_derivative(poly("7", "x y"), "x").is_zero()

    def test_derivative_of_g1(self, poly):
        names = "x11 u1 t1"
        assert partial_derivative(poly("(x11 - t1)*u1", names), "u1") == poly("x11 - t1", names)

    def test_unknown_derivative_variable(self, poly):
        with pytest.raises(PolynomialError):
            partial_derivative(poly("x", "x y"), "z")

    def test_commuting_diagonals(self, rationals):
        f = parse_polynomial("x12*y21 - y12*x21", R2_VARS, rationals)
        values = {"x11": 2, "x12": 0, "x21": 0, "x22": 3, "y11": 4, "y12": 0, "y21": 0, "y22": 5}
        assert evaluate(f, Point.from_mapping(values, R2_VARS, rationals)) == 0

    def test_constant(self, poly, rationals):
        p = Point.from_mapping({"x": 3, "y": -2}, VariableSet.of("x", "y"), rationals)
        assert evaluate(poly("7", "x y"), p) == 7

    def test_missing_assignment(self, rationals):
        with pytest.raises(PolynomialError) as e:
            Point.from_mapping({"x": 1}, VariableSet.of("x", "y"), rationals)
        assert e.value.code == "MISSING_ASSIGNMENT"

    @given(polynomials(), polynomials(), points())
    @settings(deadline=None, max_examples=50)
    def test_evaluation_is_a_ring_homomorphism(self, f, g, values):
        p = Point.from_mapping(dict(zip(XYZ.names, values)), XYZ, F101)
        assert (f + g).evaluate(p) == F101.add(f.evaluate(p), g.evaluate(p))
        assert (f * g).evaluate(p) == F101.mul(f.evaluate(p), g.evaluate(p))

    def test_substitute(self, poly):
        target = VariableSet.of("s")
        images = {"x": poly("s + 1", "s"), "y": poly("s^2", "s")}
        assert poly("x^2 - y", "x y").substitute(images, target) == poly("2*s + 1", "s")


class TestMonomialOrders:
    @pytest.mark.parametrize("order,m1,m2,expected", [
        (MonomialOrder.grevlex(), (2, 1), (1, 2), Comparison.GT),
        (MonomialOrder.lex(), (0, 5), (1, 0), Comparison.LT),
        (MonomialOrder.lex(), (3, 4), (3, 4), Comparison.EQ),
        (MonomialOrder.grevlex(), (1, 1), (1, 1), Comparison.EQ),
    ])
    def test_compare(self, order, m1, m2, expected):
        assert compare(order, m1, m2) == expected

    def test_grevlex_breaks_ties_on_last_variable(self):
        # x*z < y^2 in grevlex with x > y > z
        assert compare(MonomialOrder.grevlex(), (1, 0, 1), (0, 2, 0)) == Comparison.LT

    def test_block_order_puts_front_variables_first(self):
        vars = VariableSet.of("x", "y", "t")
        order = MonomialOrder.block(["t"])
        assert order.compare((0, 0, 1), (5, 5, 0), vars) == Comparison.GT

    def test_leading_term_follows_the_order_asked_for(self):
        f = parse_polynomial("x + 3*y^2", XYZ, CoefficientField.rationals())
        front_y = MonomialOrder.block(["y"])
        for _ in range(2):
            assert f.leading_term(MonomialOrder.lex()) == ((1, 0, 0), 1)
            assert f.leading_term(MonomialOrder.grevlex()) == ((0, 2, 0), 3)
            assert f.leading_monomial(front_y) == (0, 2, 0)

    def test_length_mismatch(self):
        with pytest.raises(PolynomialError):
            compare(MonomialOrder.lex(), (1, 0), (1, 0, 0))

    def test_unknown_order(self):
        with pytest.raises(PolynomialError):
            MonomialOrder.from_name("deglex")

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)), min_size=3, max_size=3))
    def test_orders_respect_multiplication(self, monos):
        a, b, c = monos
        for order in (MonomialOrder.lex(), MonomialOrder.grevlex()):
            key = order.key(XYZ)
            assert key((0, 0, 0)) <= key(a)
            if key(a) < key(b):
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                assert key(ac) < key(bc)
