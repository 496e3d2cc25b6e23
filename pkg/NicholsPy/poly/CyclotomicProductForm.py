import numbers

from sympy import Symbol, cyclotomic_poly, divisors

from .LaurentMonomial import LaurentMonomial
from .LaurentPolynomial import LaurentPolynomial


def cyclotomic(k):
    """
    :param k: Positive integer.
    :return: The k-th cyclotomic polynomial as a sympy Poly in x over ZZ.
    """
    if not isinstance(k, numbers.Integral):
        raise TypeError("k must be an integer.")

    if k < 1:
        raise ValueError("cyclotomic polynomials are indexed by k >= 1.")

    return cyclotomic_poly(int(k), Symbol("x"), polys=True)


def cyclotomic_coefficients(k):
    """
    :return: Integer coefficients of Phi_k in ascending powers of x.
    """
    return [int(c) for c in reversed(cyclotomic(k).all_coeffs())]


class CyclotomicProductForm(object):
    """
    Represents sign * unit * prod_d Phi_d(Q)^{mult(d)} for a fixed monomial Q.

    Negative multiplicities are allowed, so quotients such as A_m for a
    single-letter degree stay representable; expand() needs them all >= 0.
    """
    def __init__(self, base, multiplicities=None, sign=1, unit=None):
        """
        :param base: The monomial Q.
        :type base: LaurentMonomial
        :param multiplicities: Map d -> multiplicity of Phi_d(Q).
        :type multiplicities: dict or None
        :param sign: +1 or -1.
        :param unit: Monomial unit, defaults to 1.
        :type unit: LaurentMonomial or None
        """
        if multiplicities is None:
            multiplicities = {}

        if unit is None:
            unit = LaurentMonomial.one()

        self.__check_parameters(base, multiplicities, sign, unit)

        self._base = base
        self._sign = int(sign)
        self._unit = unit
        self._multiplicities = {int(d): int(mult)
                                for d, mult in multiplicities.items()
                                if mult != 0}

    @classmethod
    def one_minus_power(cls, base, j, exponent=1):
        """
        (1 - Q^j)^e = (-1)^e prod_{d | j} Phi_d(Q)^e.
        """
        if j < 1:
            raise ValueError("1 - Q^j needs j >= 1.")

        return cls(base, {d: exponent for d in divisors(j)},
                   sign=(-1) ** (exponent % 2))

    @classmethod
    def q_integer(cls, base, k):
        """
        (k)_Q = prod_{d | k, d > 1} Phi_d(Q) for k >= 1.
        """
        if k < 1:
            raise ValueError("(k)_Q has a product form only for k >= 1.")

        return cls(base, {d: 1 for d in divisors(k) if d > 1})

    @property
    def base(self):
        return self._base

    @property
    def sign(self):
        return self._sign

    @property
    def unit(self):
        return self._unit

    @property
    def multiplicities(self):
        return dict(self._multiplicities)

    def multiplicity(self, d):
        return self._multiplicities.get(d, 0)

    def support(self):
        """
        :return: Sorted list of d with positive multiplicity.
        """
        return sorted(d for d, mult in self._multiplicities.items()
                      if mult > 0)

    def is_polynomial(self):
        return all(mult >= 0 for mult in self._multiplicities.values())

    def radical(self):
        """
        :return: The product of the distinct factors Phi_d(Q), d in support().
        """
        return CyclotomicProductForm(self._base,
                                     {d: 1 for d in self.support()})

    def equivalent(self, other):
        """
        Equality up to sign and monomial unit.
        """
        return self._base == other.base and \
            self._multiplicities == other.multiplicities

    def expand(self):
        """
        :return: The LaurentPolynomial this form represents.
        """
        if not self.is_polynomial():
            raise ValueError("cannot expand a form with negative "
                             "multiplicities.")

        result = LaurentPolynomial.from_monomial(self._unit, self._sign)
        for d in sorted(self._multiplicities):
            factor = LaurentPolynomial()
            for power, coeff in enumerate(cyclotomic_coefficients(d)):
                factor = factor + LaurentPolynomial.from_monomial(
                    self._base ** power, coeff)
            result = result * factor ** self._multiplicities[d]
        return result

    def evaluate(self, value, unit_value=None):
        """
        Evaluates the form at a ring or field element value of Q.

        :param value: Value of Q, any element supporting +, * and ** (negative
            powers need a field).
        :param unit_value: Value of the unit monomial; defaults to 1.
        """
        one = value ** 0
        result = one * self._sign
        if unit_value is not None:
            result = result * unit_value

        for d in sorted(self._multiplicities):
            phi = value - value
            power = one
            for coeff in cyclotomic_coefficients(d):
                phi = phi + power * coeff
                power = power * value
            result = result * phi ** self._multiplicities[d]
        return result

    def to_dict(self):
        return {"sign": self._sign,
                "unit": self._unit.to_json(),
                "base": self._base.to_json(),
                "multiplicities": {str(d): self._multiplicities[d]
                                   for d in sorted(self._multiplicities)}}

    def __mul__(self, other):
        self.__check_same_base(other)

        multiplicities = dict(self._multiplicities)
        for d, mult in other.multiplicities.items():
            multiplicities[d] = multiplicities.get(d, 0) + mult

        return CyclotomicProductForm(self._base, multiplicities,
                                     self._sign * other.sign,
                                     self._unit * other.unit)

    def __truediv__(self, other):
        self.__check_same_base(other)
        return self * other ** -1

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral):
            raise TypeError("form powers must be integers.")

        return CyclotomicProductForm(
            self._base,
            {d: mult * power for d, mult in self._multiplicities.items()},
            self._sign ** (power % 2), self._unit ** power)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicProductForm):
            return NotImplemented
        return self.equivalent(other) and self._sign == other.sign and \
            self._unit == other.unit

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._base, self._sign, self._unit,
                     tuple(sorted(self._multiplicities.items()))))

    def __str__(self):
        factors = []
        for d in sorted(self._multiplicities):
            mult = self._multiplicities[d]
            if mult == 1:
                factors.append("Phi_%d(Q)" % d)
            else:
                factors.append("Phi_%d(Q)^%d" % (d, mult))

        if not self._unit.is_one():
            factors.insert(0, str(self._unit))

        body = "*".join(factors) if factors else "1"
        prefix = "-" if self._sign < 0 else ""
        return "%s%s [Q = %s]" % (prefix, body, self._base)

    def __repr__(self):
        return "CyclotomicProductForm('%s')" % self

    def __check_same_base(self, other):

        if not isinstance(other, CyclotomicProductForm):
            raise TypeError("expected a CyclotomicProductForm.")

        if other.base != self._base:
            raise ValueError("product forms must share the monomial Q.")

    @staticmethod
    def __check_parameters(base, multiplicities, sign, unit):

        if not isinstance(base, LaurentMonomial):
            raise TypeError("base must be a LaurentMonomial.")

        if not isinstance(unit, LaurentMonomial):
            raise TypeError("unit must be a LaurentMonomial.")

        if not isinstance(multiplicities, dict):
            raise TypeError("multiplicities must be a dict d -> int.")

        if sign not in (1, -1):
            raise ValueError("sign must be 1 or -1.")

        for d, mult in multiplicities.items():
            if not isinstance(d, numbers.Integral) or d < 1:
                raise ValueError("cyclotomic indices must be positive.")
            if not isinstance(mult, numbers.Integral):
                raise TypeError("multiplicities must be integers.")
