import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import poly_from_roots_of_unity_product
from singcurve.intpoly import IntPolynomial, coeffs_from_power_sums, power_sums

polys = st.lists(st.integers(-20, 20), max_size=7).map(IntPolynomial)
monic_ish = st.tuples(st.lists(st.integers(-5, 5), max_size=4), st.sampled_from([1, -1])).map(lambda t: IntPolynomial(t[0] + [t[1]]))


def test_normalization_and_eval():
    f = IntPolynomial([1, 2, 0, 0])
    assert f.coeffs == (1, 2) and f.degree == 1
    assert IntPolynomial().degree == -1
    assert IntPolynomial([1, 1, 1])(2) == 7
    assert str(IntPolynomial([1, -1])) == "1 - t"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPolynomial()


@given(polys, monic_ish)
def test_divmod(a, b):
    quo, rem = divmod(a * b, b)
    assert quo == a and rem == IntPolynomial()
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


def test_exact_div():
    f = IntPolynomial.one_minus_t_power(3).exact_div(IntPolynomial.one_minus_t_power(1))
    assert f.coeffs == (1, 1, 1)
    with pytest.raises(ArithmeticError):
        IntPolynomial.one_minus_t_power(3).exact_div(IntPolynomial.one_minus_t_power(2))


def test_binomial():
    assert IntPolynomial.binomial(3, 1).coeffs == (1, 3, 3, 1)
    assert IntPolynomial.binomial(2, -1) == IntPolynomial([1, -1]) ** 2


def test_power_sums_examples():
    assert power_sums(IntPolynomial([1, 1]), 5) == [-1, 1, -1, 1, -1]
    # nontrivial cube roots of unity: w + w^2 = -1, w^3 + w^6 = 2
    assert power_sums(IntPolynomial([1, 1, 1]), 6) == [-1, -1, 2, -1, -1, 2]
    assert power_sums(IntPolynomial([1]), 4) == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        power_sums(IntPolynomial([2, 1]), 2)


@given(st.lists(st.sampled_from([1, 2, 3, 4, 6]), max_size=5), st.lists(st.sampled_from([-3, -1, 2, 5]), max_size=3))
def test_power_sums_of_known_roots(orders, integer_roots):
    # factors (1 - t^d) have inverse roots the d-th roots of unity: power sum d if d | n else 0
    factors = [[1] + [0] * (d - 1) + [-1] for d in orders] + [[1, -r] for r in integer_roots]
    f = IntPolynomial(poly_from_roots_of_unity_product(factors))
    want = [sum(d for d in orders if n % d == 0) + sum(r**n for r in integer_roots) for n in range(1, 9)]
    assert power_sums(f, 8) == want


@given(st.lists(st.integers(-20, 20), max_size=6).map(lambda c: IntPolynomial([1] + c)))
def test_power_sum_round_trip(f):
    assert IntPolynomial(coeffs_from_power_sums(power_sums(f, max(f.degree, 0)))) == f


def test_non_integral_power_sums():
    with pytest.raises(ArithmeticError):
        coeffs_from_power_sums([0, 1])


def test_iteration_terminates():
    assert list(IntPolynomial([1, 0, 2])) == [1, 0, 2] and len(IntPolynomial([1, 0])) == 1
