import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from .FieldContext import FieldContext


class RationalFunctionField(FieldContext):
    """
    The field Q(t) of rational functions in one transcendental t, with
    elements kept as reduced sympy fractions. Braidings q_ij = t^{a_ij} model
    a q that is not a root of unity.
    """
    def __init__(self):

        self._field, self._t = field("t", QQ)

    def zero(self):
        return self._field.zero

    def one(self):
        return self._field.one

    def generator(self):
        return self._t

    def t_power(self, exponent):
        return self.generator_power(exponent)

    def element(self, numerator, denominator=None):
        """
        :param numerator: Rational coefficients of 1, t, t^2, ...
        :param denominator: Same for the denominator, defaults to 1.
        """
        if denominator is None:
            denominator = [1]

        numer = self.__polynomial(numerator)
        denom = self.__polynomial(denominator)
        if denom == self.zero():
            raise ZeroDivisionError("denominator must be nonzero.")

        return numer / denom

    def convert(self, value):

        if isinstance(value, FracElement):
            if not self.contains(value):
                raise ValueError("element of another rational function "
                                 "field.")
            return value

        return self._field.ground_new(self.rational(value))

    def contains(self, element):
        return isinstance(element, FracElement) and \
            element.field == self._field

    def order(self, element):
        """
        The only roots of unity in Q(t) are 1 and -1.
        """
        element = self.convert(element)
        if element == self.zero():
            raise ValueError("zero has no multiplicative order.")

        if element == self.one():
            return 1

        if element == -self.one():
            return 2

        return np.inf

    def serialize(self, element):

        element = self.convert(element)
        return {"field": "transcendental",
                "numerator": self.__coefficients(element.numer),
                "denominator": self.__coefficients(element.denom)}

    def deserialize(self, data):

        if data.get("field") != "transcendental":
            raise ValueError("not an element of Q(t).")

        return self.element(data["numerator"], data["denominator"])

    def to_dict(self):
        return {"field": "transcendental"}

    def __polynomial(self, coefficients):

        result = self.zero()
        power = self.one()
        for c in coefficients:
            result = result + power * self.convert(c)
            power = power * self._t
        return result

    @staticmethod
    def __coefficients(polynomial):

        return [str(c) for c in reversed(polynomial.to_dense())]

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField)

    def __hash__(self):
        return hash("transcendental")

    def __str__(self):
        return "Q(t)"

    def __repr__(self):
        return "RationalFunctionField()"
