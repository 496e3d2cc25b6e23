import pytest
import os
import sys

import numpy as np

# Needed when running mpiexec. Be sure to run from tests directory.
if 'PYTHONPATH' not in os.environ:

    base_path = os.path.abspath('..')

    sys.path.insert(0, base_path)

from NicholsPy.field import CyclotomicField
from NicholsPy.poly import LaurentPolynomial
from tests.testing_scripts import random_cyclotomic_braidings, \
    random_element, random_nonzero_element, random_polynomial


@pytest.fixture
def q_zeta5():
    """
    Q(zeta_5), of degree 4 over Q.
    """
    return CyclotomicField(5)


def test_degree(q_zeta5):

    assert q_zeta5.degree == 4
    assert CyclotomicField(1).degree == 1
    assert CyclotomicField(12).degree == 4


@pytest.mark.parametrize("N", [0, -3])
def test_nonpositive_order_raises_error(N):

    with pytest.raises(ValueError):
        CyclotomicField(N)


def test_non_integer_order_raises_error():

    with pytest.raises(TypeError):
        CyclotomicField(2.5)


def test_zeta_powers(q_zeta5):

    zeta = q_zeta5.generator()

    assert q_zeta5.power(zeta, 5) == q_zeta5.one()
    assert q_zeta5.zeta_power(7) == q_zeta5.zeta_power(2)
    assert q_zeta5.zeta_power(-1) == q_zeta5.power(zeta, 4)
    assert q_zeta5.inverse(zeta) * zeta == q_zeta5.one()


def test_reduction_modulo_phi(q_zeta5):

    # 1 + z + z^2 + z^3 + z^4 = 0
    assert q_zeta5.is_zero(q_zeta5.element([1, 1, 1, 1, 1]))
    assert q_zeta5.zeta_power(4) == q_zeta5.element([-1, -1, -1, -1])


def test_fourth_roots():

    context = CyclotomicField(4)
    assert context.zeta_power(2) == context.convert(-1)
    assert context.order(context.generator()) == 4


@pytest.mark.parametrize("exponent, sign, expected", [
    (1, 1, 5),
    (0, -1, 2),
    (1, -1, 10),
    (0, 1, 1),
    (2, 1, 5),
])
def test_orders(q_zeta5, exponent, sign, expected):

    element = q_zeta5.zeta_power(exponent) * sign
    assert q_zeta5.order(element) == expected


def test_non_root_of_unity_has_infinite_order(q_zeta5):

    assert q_zeta5.order(2) == np.inf
    assert q_zeta5.order(q_zeta5.element([1, 1])) == np.inf
    assert CyclotomicField(1).order("1/3") == np.inf


def test_order_of_zero_raises_error(q_zeta5):

    with pytest.raises(ValueError):
        q_zeta5.order(0)


def test_rational_entries():

    context = CyclotomicField(1)
    assert context.convert("2/4") == context.convert("1/2")
    assert context.convert(3) * context.convert("1/3") == context.one()


def test_serialize_roundtrip(q_zeta5):

    element = q_zeta5.element(["1/2", 0, -3])
    data = q_zeta5.serialize(element)

    assert data["field"] == "cyclotomic"
    assert data["N"] == 5
    assert data["coeffs"] == ["1/2", "0", "-3", "0"]
    assert q_zeta5.deserialize(data) == element


def test_deserialize_other_field_raises_error(q_zeta5):

    data = CyclotomicField(7).serialize(CyclotomicField(7).one())
    with pytest.raises(ValueError):
        q_zeta5.deserialize(data)


def test_convert_foreign_element_raises_error(q_zeta5):

    with pytest.raises(ValueError):
        q_zeta5.convert(CyclotomicField(7).generator())


def test_negative_power_of_zero_raises_error(q_zeta5):

    with pytest.raises(ZeroDivisionError):
        q_zeta5.power(q_zeta5.zero(), -1)


def test_equality():

    assert CyclotomicField(5) == CyclotomicField(5)
    assert CyclotomicField(5) != CyclotomicField(10)
    assert hash(CyclotomicField(5)) == hash(CyclotomicField(5))


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5, 6, 12])
def test_order_is_minimal(N):

    context = CyclotomicField(N)
    for exponent in range(N):
        for sign in (1, -1):
            element = context.zeta_power(exponent) * sign
            order = context.order(element)

            assert context.is_one(context.power(element, order))
            assert not any(context.is_one(context.power(element, k))
                           for k in range(1, order))


@pytest.mark.parametrize("N", [3, 5, 12])
@pytest.mark.parametrize("seed", [0, 1])
def test_field_axioms(N, seed):

    context = CyclotomicField(N)
    random_state = np.random.RandomState(seed)

    for _ in range(10):
        x, y, z = [random_element(context, random_state) for _ in range(3)]

        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        assert x + context.zero() == x
        assert x * context.one() == x
        assert context.is_zero(x - x)

        w = random_nonzero_element(context, random_state)
        assert context.is_one(w * context.inverse(w))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_evaluate_is_ring_homomorphism(q_zeta5, seed):

    random_state = np.random.RandomState(seed)
    braidings = random_cyclotomic_braidings(2, 5, 2, seed=seed)

    for braiding in braidings:
        f = random_polynomial(random_state, 2)
        g = random_polynomial(random_state, 2)

        assert q_zeta5.evaluate(f * g, braiding) == \
            q_zeta5.evaluate(f, braiding) * q_zeta5.evaluate(g, braiding)
        assert q_zeta5.evaluate(f + g, braiding) == \
            q_zeta5.evaluate(f, braiding) + q_zeta5.evaluate(g, braiding)


def test_evaluate_sends_variables_to_entries(q_zeta5):

    braiding = random_cyclotomic_braidings(2, 5, 1, seed=3)[0]
    for i in (1, 2):
        for j in (1, 2):
            variable = LaurentPolynomial.variable(i, j)
            assert q_zeta5.evaluate(variable, braiding) == \
                braiding.entry(i, j)
