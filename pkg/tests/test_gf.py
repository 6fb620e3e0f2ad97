import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import degree_census
from singcurve.gf import (
    FieldCapError,
    enumerate_field,
    frobenius_q,
    is_irreducible,
    make_field,
    minimal_degree,
    smallest_irreducible,
    vminimal_degree,
)

FIELDS = [(2, 1, 1), (2, 1, 2), (3, 1, 2), (2, 2, 2), (5, 1, 3), (3, 2, 2), (2, 1, 6), (7, 1, 2)]


def test_prime_field_modulus_is_x():
    assert make_field(2, 1, 1).modulus == (0, 1)
    assert [x.value for x in enumerate_field(make_field(2))] == [0, 1]


def test_f4_modulus():
    # the four monic quadratics over F_2: x^2, x^2+1, x^2+x have roots; x^2+x+1 does not
    irreducible = [f for f in ([0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]) if all(sum(c * r**i for i, c in enumerate(f)) % 2 for r in (0, 1))]
    assert irreducible == [[1, 1, 1]]
    assert make_field(2, 1, 2).modulus == (1, 1, 1)


def test_f9_modulus_is_x2_plus_1():
    # exhaustive: smallest (c + 3b) with x^2 + b x + c rootless mod 3
    rootless = [(c, b) for b in range(3) for c in range(3) if all((r * r + b * r + c) % 3 for r in range(3))]
    c, b = min(rootless, key=lambda cb: cb[0] + 3 * cb[1])
    assert (c, b) == (1, 0)
    assert make_field(3, 1, 2).modulus == (1, 0, 1)


def test_modulus_deterministic_and_irreducible():
    for p, e, m in FIELDS:
        f = make_field(p, e, m)
        assert f == make_field(p, e, m)
        assert is_irreducible(f.modulus, p)
        assert len(f.modulus) == e * m + 1 and f.modulus[-1] == 1


def test_irreducibility_test_against_root_search():
    # degree 2 and 3 polynomials are irreducible iff rootless
    for p in (2, 3, 5):
        for k in (2, 3):
            for low in range(p**k):
                f = [(low // p**i) % p for i in range(k)] + [1]
                rootless = all(sum(c * r**i for i, c in enumerate(f)) % p for r in range(p))
                assert is_irreducible(f, p) == rootless, (p, f)
    assert smallest_irreducible(2, 4) == (1, 1, 0, 0, 1)


def test_errors():
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(FieldCapError):
        make_field(2, 1, 25)
    with pytest.raises(FieldCapError):
        make_field(2, 1, 5, cap=16)
    f4, f9 = make_field(2, 1, 2), make_field(3, 1, 2)
    with pytest.raises(ValueError):
        f4(1) + f9(1)
    with pytest.raises(ZeroDivisionError):
        f4.zero.inverse()


def test_frobenius_on_f4_generator():
    f = make_field(2, 1, 2)
    g = f.gen
    assert frobenius_q(g) == g * g == g + 1
    assert minimal_degree(g) == 2
    assert minimal_degree(f.zero) == minimal_degree(f.one) == 1


def test_frobenius_fixes_base_field():
    f = make_field(2, 2, 3)  # F_64 over F_4
    base = [x for x in enumerate_field(f) if frobenius_q(x) == x]
    assert len(base) == 4


def test_degree_two_element_inside_f16():
    f = make_field(2, 1, 4)
    roots = [x for x in enumerate_field(f) if x * x + x + 1 == f.zero]
    assert len(roots) == 2
    assert all(minimal_degree(r) == 2 for r in roots)


def test_f64_degree_census():
    f = make_field(2, 1, 6)
    elts = list(enumerate_field(f))
    assert len(elts) == 64
    census = {}
    for x in elts:
        census[minimal_degree(x)] = census.get(minimal_degree(x), 0) + 1
    assert census == {1: 2, 2: 2, 3: 6, 6: 54}
    assert census == {d: degree_census(2, d) for d in (1, 2, 3, 6)}


@pytest.mark.parametrize("p,e,m", FIELDS)
def test_field_axioms_and_census(p, e, m):
    f = make_field(p, e, m)
    elts = list(enumerate_field(f))
    assert [x.value for x in elts] == list(range(f.size))
    for x in elts[1:]:
        assert x * x.inverse() == f.one
        assert x ** (f.size - 1) == f.one
        assert len({frobenius_q(x).value} | {x.frobenius(k).value for k in range(m)}) == minimal_degree(x)
        assert x.frobenius(m) == x
    assert all(x + (-x) == f.zero for x in elts)
    degs = [minimal_degree(x) for x in elts]
    assert all(m % d == 0 for d in degs)
    for d in {*degs}:
        assert degs.count(d) == degree_census(f.q, d)
    assert vminimal_degree(f, np.arange(f.size)).tolist() == degs


def _elements(p, e, m):
    f = make_field(p, e, m)
    return st.integers(0, f.size - 1).map(f)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda t: st.tuples(_elements(*t), _elements(*t), _elements(*t))))
def test_ring_laws_and_frobenius_homomorphism(xyz):
    x, y, z = xyz
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - y == -(y - x)
    assert frobenius_q(x * y) == frobenius_q(x) * frobenius_q(y)
    assert frobenius_q(x + y) == frobenius_q(x) + frobenius_q(y)
    if y:
        assert (x / y) * y == x


def test_elements_from_coeffs():
    f = make_field(3, 1, 2)
    x = f([2, 1])
    assert x.coeffs == (2, 1) and x.value == 5
    assert repr(x) == "x + 2"
    with pytest.raises(ValueError):
        f([3, 0])
