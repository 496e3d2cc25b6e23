import abc
import numbers

from sympy import Rational
from sympy.polys.domains import QQ


class FieldContext(object):
    """
    Abstract base class for the exact characteristic-0 fields braidings take
    their entries in. Elements are plain sympy field elements; the context
    knows how to build, compare, serialize and measure the order of them.
    """
    @abc.abstractmethod
    def zero(self):
        raise NotImplementedError

    @abc.abstractmethod
    def one(self):
        raise NotImplementedError

    @abc.abstractmethod
    def generator(self):
        """
        :return: The distinguished element: zeta_N for cyclotomic fields,
            t for the rational function field.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def convert(self, value):
        """
        Embeds an integer, rational or field element of this context.

        :param value: int, Fraction, "a/b" string or field element.
        :return: Field element.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def contains(self, element):
        """
        :return: True if element is an element of this field.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def order(self, element):
        """
        Multiplicative order of a nonzero element.

        :return: Least k >= 1 with element^k = 1, or numpy.inf.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def serialize(self, element):
        """
        :return: JSON-serializable dict describing the element.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def deserialize(self, data):
        raise NotImplementedError

    @abc.abstractmethod
    def to_dict(self):
        raise NotImplementedError

    def is_zero(self, element):
        return element == self.zero()

    def is_one(self, element):
        return element == self.one()

    def generator_power(self, exponent):
        """
        :return: generator()^exponent, negative exponents allowed.
        """
        return self.power(self.generator(), exponent)

    def power(self, element, exponent):
        if not isinstance(exponent, numbers.Integral):
            raise TypeError("exponents must be integers.")

        if exponent < 0 and self.is_zero(element):
            raise ZeroDivisionError("zero has no inverse.")

        return element ** int(exponent)

    def inverse(self, element):
        return self.power(element, -1)

    def rational(self, value):
        """
        :return: value as an element of QQ.
        """
        if isinstance(value, numbers.Integral):
            value = int(value)
        elif isinstance(value, str):
            value = value.strip()
        return QQ.from_sympy(Rational(value))

    def evaluate(self, polynomial, braiding):
        """
        The evaluation homomorphism p_ij -> q_ij.

        :param polynomial: Laurent polynomial in the p_ij.
        :type polynomial: LaurentPolynomial
        :param braiding: Braiding matrix with entries in this field.
        :type braiding: BraidingMatrix
        :return: Field element.
        """
        if braiding.context != self:
            raise ValueError("braiding entries live in %s, not in %s." %
                             (braiding.context, self))

        result = self.zero()
        for monomial, coeff in polynomial.terms.items():
            result = result + self.evaluate_monomial(monomial, braiding) * \
                coeff
        return result

    def evaluate_monomial(self, monomial, braiding):

        if braiding.context != self:
            raise ValueError("braiding entries live in %s, not in %s." %
                             (braiding.context, self))

        value = self.one()
        for (i, j), exponent in monomial.items():
            if i > braiding.n or j > braiding.n:
                raise ValueError("p[%d][%d] is not an entry of a braiding of "
                                 "size %d." % (i, j, braiding.n))
            value = value * self.power(braiding.entry(i, j), exponent)
        return value

    def __ne__(self, other):
        return not self == other
