"""Exact polynomial arithmetic, linear solving, and interpolation."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grhecke.errors import (
    ExactDivisionError, InvalidInputError, SingularSystemError,
)
from grhecke.polyring import (
    IntPoly, NPoly, PolyFrac, RatPoly, determinant, divexact,
    interpolate_in_n, poly_gcd, poly_lcm, solve_linear, specialize_zero,
)

ZERO = IntPoly()
ONE = IntPoly.const(1)
XI = IntPoly.xi()


def ipoly(max_deg=5, max_coeff=9):
    return st.lists(
        st.integers(-max_coeff, max_coeff), min_size=0, max_size=max_deg + 1
    ).map(IntPoly)


class TestArithmetic:
    def test_square_of_one_plus_x(self):
        assert (IntPoly((1, 1)) * IntPoly((1, 1))).coeffs == (1, 2, 1)

    def test_additive_identity(self):
        p = IntPoly((2, 0, 5))
        assert p + ZERO == p

    def test_direct_expansion(self):
        assert (IntPoly((3, 0, 1)) * IntPoly((2, 0, 1))).coeffs == (6, 0, 5, 0, 1)

    def test_normalization(self):
        assert IntPoly((0, 0, 0)).coeffs == ()
        assert IntPoly((1, 0, 0)).coeffs == (1,)

    def test_degree_of_product(self):
        p, q = IntPoly((1, 2)), IntPoly((0, 0, 3))
        assert (p * q).degree == p.degree + q.degree

    @given(ipoly(), ipoly(), ipoly())
    def test_ring_axioms(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r

    @given(ipoly())
    def test_sub_is_add_neg(self, p):
        assert p - p == ZERO

    def test_integer_scalar_multiplication(self):
        p = IntPoly((3, 0, 1))
        assert (2 * p).coeffs == (6, 0, 2)
        assert (p * 0) == ZERO

    def test_power(self):
        assert (IntPoly((1, 1)) ** 3).coeffs == (1, 3, 3, 1)
        assert (XI ** 0) == ONE


class TestSpecializeZero:
    def test_constant_term(self):
        assert specialize_zero(IntPoly((3, 0, 1))) == 3

    def test_zero(self):
        assert specialize_zero(ZERO) == 0

    def test_pure_odd(self):
        assert specialize_zero(IntPoly((0, 2))) == 0

    @given(ipoly(), ipoly())
    def test_ring_homomorphism(self, p, q):
        assert specialize_zero(p * q) == specialize_zero(p) * specialize_zero(q)
        assert specialize_zero(p + q) == specialize_zero(p) + specialize_zero(q)


class TestParity:
    def test_even(self):
        assert IntPoly((3, 0, 1)).parity() == "even"

    def test_odd(self):
        assert IntPoly((0, 2)).parity() == "odd"

    def test_mixed(self):
        assert IntPoly((1, 1)).parity() == "mixed"

    def test_zero(self):
        assert ZERO.parity() == "zero"

    @given(ipoly(), ipoly())
    def test_multiplicative_on_pure_inputs(self, p, q):
        table = {("even", "even"): "even", ("even", "odd"): "odd",
                 ("odd", "even"): "odd", ("odd", "odd"): "even"}
        key = (p.parity(), q.parity())
        if key in table:
            assert (p * q).parity() in (table[key], "zero")


class TestNonnegative:
    def test_positive(self):
        assert IntPoly((3, 0, 1)).is_nonnegative()

    def test_zero(self):
        assert ZERO.is_nonnegative()

    def test_negative(self):
        assert not IntPoly((-1, 1)).is_nonnegative()


class TestDivisionAndGcd:
    def test_divexact(self):
        p = IntPoly((1, 1)) * IntPoly((2, 0, 3))
        assert divexact(p, IntPoly((1, 1))) == IntPoly((2, 0, 3))

    def test_divexact_rejects_remainder(self):
        with pytest.raises(ExactDivisionError):
            divexact(IntPoly((1, 1, 1)), IntPoly((1, 1)))

    @given(ipoly(3, 5), ipoly(3, 5))
    def test_gcd_divides_both(self, p, q):
        g = poly_gcd(p, q)
        if g:
            divexact(p, g)
            divexact(q, g)
        else:
            assert not p and not q

    def test_lcm(self):
        a, b = IntPoly((1, 1)), IntPoly((0, 1))
        assert poly_lcm(a, b) == a * b


class TestPolyFrac:
    def test_reduction(self):
        f = PolyFrac(IntPoly((0, 2)), IntPoly((0, 0, 2)))
        assert f.num == ONE and f.den == XI

    def test_polynomial_detection(self):
        f = PolyFrac(XI * XI, XI)
        assert f.is_polynomial() and f.as_poly() == XI

    def test_arithmetic(self):
        half = PolyFrac(ONE, IntPoly.const(2))
        assert half + half == PolyFrac(ONE)


class TestSolveLinear:
    def test_identity_matrix(self):
        A = [[ONE, ZERO], [ZERO, ONE]]
        b = [IntPoly((1, 2)), XI]
        assert [f.as_poly() for f in solve_linear(A, b)] == b

    def test_diagonal(self):
        A = [[XI, ZERO], [ZERO, ONE]]
        b = [IntPoly((0, 0, 1)), ONE]
        assert [f.as_poly() for f in solve_linear(A, b)] == [XI, ONE]

    def test_unitriangular_backsub(self):
        A = [[ONE, IntPoly((1, 1))], [ZERO, ONE]]
        b = [IntPoly((2, 1)), XI]
        x = solve_linear(A, b)
        # residual check: A x == b exactly
        for row, rhs in zip(A, b):
            acc = PolyFrac(ZERO)
            for a, v in zip(row, x):
                acc = acc + PolyFrac(a) * v
            assert acc == PolyFrac(rhs)

    def test_singular_square_reports_rank(self):
        A = [[ONE, ONE], [ONE, ONE]]
        with pytest.raises(SingularSystemError) as exc:
            solve_linear(A, [ONE, ZERO])
        assert exc.value.rank == 1

    def test_underdetermined_allowed(self):
        A = [[ONE, ONE]]
        x = solve_linear(A, [XI], allow_underdetermined=True)
        assert x[0].as_poly() == XI and not x[1]

    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                    min_size=3, max_size=3))
    def test_random_integer_systems(self, rows):
        A = [[IntPoly.const(c) for c in row] for row in rows]
        b = [ONE, XI, IntPoly((1, 1))]
        try:
            x = solve_linear(A, b)
        except SingularSystemError:
            return
        for row, rhs in zip(A, b):
            acc = PolyFrac(ZERO)
            for a, v in zip(row, x):
                acc = acc + PolyFrac(a) * v
            assert acc == PolyFrac(rhs)


class TestDeterminant:
    def test_two_by_two(self):
        A = [[ONE, XI], [XI, ONE]]
        assert determinant(A) == ONE - XI * XI

    def test_singular(self):
        A = [[ONE, ONE], [ONE, ONE]]
        assert determinant(A) == ZERO


class TestInterpolation:
    def test_triangle_numbers(self):
        pts = [(3, IntPoly.const(3)), (4, IntPoly.const(6)), (5, IntPoly.const(10))]
        f = interpolate_in_n(pts)
        # n(n-1)/2
        assert f.coeffs == (RatPoly(()), RatPoly((Fraction(-1, 2),)),
                            RatPoly((Fraction(1, 2),)))
        assert f.evaluate(6) == RatPoly((15,))

    def test_constant(self):
        c = IntPoly((3, 0, 1))
        f = interpolate_in_n([(3, c), (4, c)])
        assert f.evaluate(7) == RatPoly.from_intpoly(c)

    def test_linear_in_x(self):
        pts = [(3, IntPoly((0, 2))), (4, IntPoly((0, 3))), (5, IntPoly((0, 4)))]
        f = interpolate_in_n(pts)
        # (n-1) x
        assert f.evaluate(6) == RatPoly((0, 5))
        assert f.coeffs == (RatPoly((0, -1)), RatPoly((0, 1)))

    def test_duplicate_ranks_rejected(self):
        with pytest.raises(InvalidInputError):
            interpolate_in_n([(3, ONE), (3, ONE)])

    @given(st.lists(st.tuples(st.integers(2, 9), ipoly(2, 4)),
                    min_size=2, max_size=5,
                    unique_by=lambda t: t[0]))
    def test_reproduces_points(self, pts):
        f = interpolate_in_n(pts)
        for n, v in pts:
            assert f.evaluate(n) == RatPoly.from_intpoly(v)


class TestRendering:
    def test_ascending(self):
        assert IntPoly((3, 2, 1)).to_str() == "3 + 2*x + x^2"

    def test_compact_descending(self):
        assert IntPoly((3, 0, 1)).to_str(ascending=False, compact=True) == "x^2+3"
        assert IntPoly((0, 2)).to_str(ascending=False, compact=True) == "2x"

    def test_zero(self):
        assert ZERO.to_str() == "0"

    def test_npoly_render(self):
        f = NPoly([RatPoly(()), RatPoly((Fraction(-1, 2),)), RatPoly((Fraction(1, 2),))])
        assert f.render() == "(1/2)*n^2 - (1/2)*n"

    def test_json_round_trip(self):
        p = IntPoly((-3, 0, 12345678901234567890))
        assert IntPoly.from_json(p.to_json()) == p
