import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from laurent_eulerian.algebra import (
    QQ,
    ExactMatrix,
    FieldMismatchError,
    MultiPoly,
    PrimeField,
    ZeroPolynomialError,
    exact_rank,
)
from conftest import random_poly


F7 = PrimeField(7)


def var(j, nvars=3, offset=-1, field=QQ):
    return MultiPoly.variable(j, nvars, offset, field)


class TestFields:
    def test_prime_field_rejects_composite(self):
        with pytest.raises(ValueError):
            PrimeField(6)

    def test_prime_field_residues_reduced(self):
        assert F7.coerce(-1) == 6
        assert F7.coerce(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7

    def test_rational_lowest_terms(self):
        c = QQ.coerce(Fraction(2, -4))
        assert c.numerator == -1 and c.denominator == 2

    def test_field_equality(self):
        assert PrimeField(7) == F7
        assert PrimeField(5) != F7
        assert QQ != F7


class TestPolyArithmetic:
    def test_difference_of_squares(self):
        x0, x1 = var(0), var(1)
        assert (x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1

    def test_multiply_by_zero(self):
        p = var(0) + var(1) * var(-1)
        z = MultiPoly.zero(3, -1, QQ)
        assert (p * z).is_zero

    def test_field_mismatch_raises(self):
        p = var(0)
        q = MultiPoly.variable(0, 3, -1, F7)
        with pytest.raises(FieldMismatchError):
            p + q
        with pytest.raises(FieldMismatchError):
            p * q

    def test_window_mismatch_raises(self):
        with pytest.raises(ValueError):
            var(0, nvars=3) + var(0, nvars=2)

    def test_substitute_and_restrict(self):
        # x_{-1} x_0 + x_1 with x_{-1} = 2 becomes 2 x_0 + x_1
        p = var(-1) * var(0) + var(1)
        q = p.substitute({-1: 2})
        assert q == var(0).scale(2) + var(1)
        r = (var(-1) * var(1)).substitute({-1: 1, 1: 1}).restrict(0, 1)
        assert r == MultiPoly.constant(1, 1, 0, QQ)

    def test_sorted_terms_deterministic(self):
        p = var(1) + var(0) + var(-1)
        exps = [e for e, _ in p.sorted_terms()]
        assert exps == sorted(exps)


class TestGradedDegree:
    def test_weight_zero_product(self):
        p = var(-1) * var(1)
        assert p.graded_degree() == (2, 0)

    def test_single_variable(self):
        assert var(0).graded_degree() == (1, 0)

    def test_inhomogeneous(self):
        assert (var(0) + var(1)).graded_degree() is None

    def test_zero_poly_raises(self):
        with pytest.raises(ZeroPolynomialError):
            MultiPoly.zero(3, -1, QQ).graded_degree()

    def test_degree_additive_on_products(self):
        rng = random.Random(7)
        for _ in range(50):
            a = random_poly(rng, 3, -1, QQ, max_terms=1) + MultiPoly.zero(3, -1, QQ)
            b = random_poly(rng, 3, -1, QQ, max_terms=1)
            if a.is_zero or b.is_zero:
                continue
            da, db = a.graded_degree(), b.graded_degree()
            dp = (a * b).graded_degree()
            assert dp == (da[0] + db[0], da[1] + db[1])


@st.composite
def polys(draw, field=QQ):
    n_terms = draw(st.integers(0, 3))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(0, 2)) for _ in range(3))
        terms[exps] = draw(st.integers(-9, 9))
    return MultiPoly(terms, 3, -1, field)


class TestRingAxioms:
    @given(polys(), polys(), polys())
    @settings(max_examples=150)
    def test_hypothesis_axioms_rational(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + b == b + a

    def test_bulk_random_axioms_both_fields(self):
        # >= 1000 random triples, split between QQ and GF(7)
        rng = random.Random(20240817)
        for trial in range(1100):
            field = QQ if trial % 2 == 0 else F7
            a = random_poly(rng, 3, -1, field, max_terms=3, max_exp=2, coeff_range=9)
            b = random_poly(rng, 3, -1, field, max_terms=3, max_exp=2, coeff_range=9)
            c = random_poly(rng, 3, -1, field, max_terms=3, max_exp=2, coeff_range=9)
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a


class TestExactRank:
    def test_identity(self):
        assert exact_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3

    def test_zero_matrix(self):
        assert exact_rank([[0, 0], [0, 0]]) == 0

    def test_repeated_rows(self):
        rng = random.Random(3)
        rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(4)]
        rows.append(list(rows[1]))
        assert exact_rank(rows) <= 4

    def test_rank_invariant_under_shuffle_and_scale(self):
        rng = random.Random(11)
        rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)] for _ in range(6)]
        base = exact_rank(rows)
        for _ in range(10):
            perm = rows[:]
            rng.shuffle(perm)
            scaled = [
                [v * Fraction(rng.choice([1, 2, 3, -5])) for v in row] for row in perm
            ]
            assert exact_rank(scaled) == base

    def test_rank_prime_field(self):
        # [[1,1],[1,1]] has rank 1 over GF(2); [[1,1],[1,0]] rank 2
        assert exact_rank([[1, 1], [1, 1]], PrimeField(2)) == 1
        assert exact_rank([[1, 1], [1, 0]], PrimeField(2)) == 2
        # rank can drop mod p: [[1,1],[1,3]] singular mod 2 only
        assert exact_rank([[1, 1], [1, 3]], PrimeField(2)) == 1
        assert exact_rank([[1, 1], [1, 3]], QQ) == 2

    def test_solve(self):
        A = ExactMatrix([[2, 0], [0, 4]], QQ)
        assert A.solve([1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
        assert ExactMatrix([[1, 1], [1, 1]], QQ).solve([0, 1]) is None

    def test_solve_underdetermined_free_vars_zero(self):
        A = ExactMatrix([[1, 1, 0]], QQ)
        x = A.solve([5])
        assert x == [5, 0, 0]
