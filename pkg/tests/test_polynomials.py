import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_snf import (
    Cell,
    Monomial,
    NameCollision,
    Partition,
    Polynomial,
    UniPoly,
    coordinate_naming,
    letter_naming,
    polynomial_from_json,
    polynomial_to_json,
    render,
)

from helpers import poly

LAM = Partition((3, 2))

GRID_CELLS = [Cell(r, c) for r in (1, 2, 3) for c in (1, 2, 3)]


def random_poly(rng, max_terms=4, max_exp=2):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = Monomial(
            {
                cell: rng.randint(1, max_exp)
                for cell in rng.sample(GRID_CELLS, rng.randint(0, 3))
            }
        )
        terms[mono] = rng.randint(-9, 9)
    return Polynomial(terms)


class TestMonomial:
    def test_empty_is_one(self):
        assert Monomial().is_one
        assert Monomial().degree == 0

    def test_merge_and_order(self):
        m = Monomial([(Cell(2, 1), 1), (Cell(1, 2), 2), (Cell(2, 1), 1)])
        assert m.pairs == ((Cell(1, 2), 2), (Cell(2, 1), 2))
        assert m.degree == 4

    def test_mul(self):
        a = Monomial.variable(Cell(1, 1))
        b = Monomial.variable(Cell(1, 1)) * Monomial.variable(Cell(2, 2))
        assert (a * b).pairs == ((Cell(1, 1), 2), (Cell(2, 2), 1))

    def test_translate_and_transpose(self):
        m = Monomial.from_cells([Cell(1, 2), Cell(2, 1)])
        assert m.translate(1, 1).pairs == ((Cell(2, 3), 1), (Cell(3, 2), 1))
        assert m.transpose() == m
        skew = Monomial.from_cells([Cell(1, 3)])
        assert skew.transpose().pairs == ((Cell(3, 1), 1),)

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValueError):
            Monomial([(Cell(1, 1), -1)])


class TestArithmetic:
    def test_cancellation(self):
        x = Polynomial.variable(Cell(1, 1))
        assert (x + 1) + (-1) == x

    def test_zero_identity(self):
        p = poly(LAM, "de+e+1")
        assert Polynomial.zero() + p == p

    def test_sum_rebuilds_grid_entry(self):
        assert poly(LAM, "e+1") + poly(LAM, "de") == poly(LAM, "de+e+1")

    def test_coefficient_times_weight_product(self):
        left = poly(LAM, "1+c+bc") * poly(LAM, "1+e+de")
        assert left == poly(LAM, "1+c+bc+e+ce+bce+de+cde+bcde")

    def test_mul_by_zero(self):
        assert poly(LAM, "de+e+1") * Polynomial.zero() == 0

    def test_exponent_growth(self):
        e = poly(LAM, "1+e")
        ee = Cell(2, 2)
        expected = Polynomial(
            {Monomial(): 1, Monomial.variable(ee): 2, Monomial({ee: 2}): 1}
        )
        assert e * e == expected

    def test_difference_cancels_to_monomial(self):
        assert poly(LAM, "c+1") - poly(LAM, "1+c+bc") == poly(LAM, "-bc")

    def test_self_difference(self):
        p = poly(LAM, "bce+ce+c+e+1")
        assert p - p == 0

    def test_neg_zero(self):
        assert -Polynomial.zero() == 0

    def test_int_promotion(self):
        p = poly(LAM, "e")
        assert 1 - p == poly(LAM, "1-e")
        assert 3 * p == poly(LAM, "3e")
        assert p + 2 == poly(LAM, "e+2")

    def test_pow(self):
        p = poly(LAM, "1+e")
        assert p**0 == 1
        assert p**3 == p * p * p


class TestRingAxioms:
    def test_random_triples(self):
        rng = random.Random(20260810)
        for _ in range(1000):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c

    def test_additive_inverse_is_canonical_zero(self):
        rng = random.Random(7)
        for _ in range(200):
            p = random_poly(rng)
            assert len(p + (-p)) == 0


class TestSubstitution:
    def test_all_variables_to_q(self):
        assert poly(LAM, "abcde").substitute_uniform() == UniPoly.monomial(5)

    def test_constant(self):
        assert Polynomial.one().substitute_uniform() == UniPoly.one()

    def test_collects_by_degree(self):
        assert poly(LAM, "de+e+1").substitute_uniform() == UniPoly((1, 1, 1))

    def test_homomorphism(self):
        rng = random.Random(99)
        for _ in range(300):
            a, b = random_poly(rng), random_poly(rng)
            assert (a + b).substitute_uniform() == a.substitute_uniform() + b.substitute_uniform()
            assert (a * b).substitute_uniform() == a.substitute_uniform() * b.substitute_uniform()

    def test_at_ones_of_zero(self):
        assert Polynomial.zero().evaluate_at_ones() == 0

    def test_at_ones_multiplicative(self):
        rng = random.Random(4)
        for _ in range(300):
            a, b = random_poly(rng), random_poly(rng)
            assert (a * b).evaluate_at_ones() == a.evaluate_at_ones() * b.evaluate_at_ones()


class TestRender:
    def test_grid_strings(self):
        naming = letter_naming(LAM.cells())
        assert render(poly(LAM, "de+e+1"), naming) == "de+e+1"
        assert render(poly(LAM, "c+1"), naming) == "c+1"
        assert render(poly(LAM, "bce+ce+c+e+1"), naming) == "bce+ce+c+e+1"

    def test_zero(self):
        assert render(Polynomial.zero()) == "0"

    def test_exponents_and_coefficients(self):
        naming = letter_naming(LAM.cells())
        p = poly(LAM, "1+e") * poly(LAM, "1+e")
        assert render(p, naming) == "e^2+2e+1"

    def test_negative_folding(self):
        naming = letter_naming(LAM.cells())
        assert render(poly(LAM, "-bc-1"), naming) == "-bc-1"

    def test_coordinate_default(self):
        p = Polynomial.variable(Cell(2, 11)) + 1
        assert render(p) == "x[2,11]+1"

    def test_collision_rejected(self):
        p = poly(LAM, "de")
        with pytest.raises(NameCollision):
            render(p, {Cell(2, 1): "z", Cell(2, 2): "z"})

    def test_letter_naming_exhaustion(self):
        cells = [Cell(1, c) for c in range(1, 28)]
        with pytest.raises(NameCollision):
            letter_naming(cells)

    def test_letter_naming_row_major(self):
        naming = letter_naming(Partition((5, 4, 1)).cells())
        assert naming[Cell(1, 1)] == "a"
        assert naming[Cell(2, 4)] == "i"
        assert naming[Cell(3, 1)] == "j"

    def test_coordinate_naming(self):
        assert coordinate_naming([Cell(1, 2)]) == {Cell(1, 2): "x[1,2]"}


class TestJson:
    def test_round_trip_grid_entry(self):
        p = poly(LAM, "abcde+bcde+bce+cde+ce+de+c+e+1")
        assert polynomial_from_json(polynomial_to_json(p)) == p

    def test_round_trip_big_coefficients(self):
        p = Polynomial(
            {Monomial.variable(Cell(1, 1)): 10**30, Monomial(): -(2**80)}
        )
        data = json.loads(json.dumps(polynomial_to_json(p)))
        assert polynomial_from_json(data) == p
        assert all(isinstance(item["coeff"], str) for item in data)

    def test_canonical_order(self):
        p = poly(LAM, "de+e+1")
        degrees = [
            sum(e for _, _, e in item["monomial"]) for item in polynomial_to_json(p)
        ]
        assert degrees == sorted(degrees, reverse=True)

    @given(
        st.lists(
            st.tuples(
                st.integers(1, 3), st.integers(1, 3), st.integers(1, 3),
                st.integers(-5, 5),
            ),
            max_size=6,
        )
    )
    @settings(max_examples=80)
    def test_round_trip_random(self, raw):
        terms = {}
        for r, c, e, coeff in raw:
            mono = Monomial({Cell(r, c): e})
            terms[mono] = terms.get(mono, 0) + coeff
        p = Polynomial(terms)
        assert polynomial_from_json(polynomial_to_json(p)) == p


class TestUniPoly:
    def test_trim(self):
        assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert UniPoly((0,)).coeffs == ()

    def test_degree_and_eval(self):
        p = UniPoly((1, 2, 1, 1))
        assert p.degree == 3
        assert p(1) == 5
        assert p(2) == 17
        assert UniPoly().degree == -1

    def test_arithmetic(self):
        assert UniPoly((1, 1)) * UniPoly((1, 1)) == UniPoly((1, 2, 1))
        assert UniPoly((1, 1)) + UniPoly((0, -1)) == UniPoly.one()

    def test_render(self):
        assert UniPoly((1, 2, 1, 1)).render() == "1+2q+q^2+q^3"
        assert UniPoly().render() == "0"
        assert UniPoly((0, 0, 1)).render() == "q^2"
        assert UniPoly((0, -1)).render() == "-q"

    def test_monomial(self):
        assert UniPoly.monomial(3) == UniPoly((0, 0, 0, 1))

    def test_to_polynomial(self):
        p = UniPoly((1, 0, 2)).to_polynomial(Cell(1, 1))
        expected = Polynomial(
            {Monomial(): 1, Monomial({Cell(1, 1): 2}): 2}
        )
        assert p == expected
