import numbers

import numpy as np
from sympy import divisors, ilcm, totient
from sympy.polys.densearith import dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.polyclasses import ANP

from NicholsPy.poly.CyclotomicProductForm import cyclotomic_coefficients
from .FieldContext import FieldContext


class CyclotomicField(FieldContext):
    """
    The cyclotomic field Q(zeta_N): residues of rational polynomials modulo
    Phi_N, represented by sympy ANP elements. For N = 1, 2 this is Q.
    """
    def __init__(self, N):
        """
        :param N: Order of the root of unity zeta.
        :type N: int
        """
        self.__check_order(N)

        self._N = int(N)
        self._modulus = [QQ.convert(c) for c in
                         reversed(cyclotomic_coefficients(self._N))]
        self._degree = int(totient(self._N))
        self._torsion = int(ilcm(2, self._N))

        self._zero = ANP([], self._modulus, QQ)
        self._one = ANP([QQ.one], self._modulus, QQ)

    @property
    def N(self):
        return self._N

    @property
    def degree(self):
        return self._degree

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def generator(self):
        return self.zeta_power(1)

    def zeta_power(self, exponent):
        """
        :return: zeta^exponent, reduced modulo Phi_N.
        """
        if not isinstance(exponent, numbers.Integral):
            raise TypeError("exponents must be integers.")

        exponent = int(exponent) % self._N
        return self._reduce([QQ.one] + [QQ.zero] * exponent)

    def element(self, coefficients):
        """
        :param coefficients: Rational coefficients of 1, zeta, zeta^2, ...
        :return: The reduced field element.
        """
        descending = [self.rational(c) for c in reversed(list(coefficients))]
        return self._reduce(descending)

    def convert(self, value):

        if isinstance(value, ANP):
            if not self.contains(value):
                raise ValueError("element of another cyclotomic field.")
            return value

        return ANP([self.rational(value)], self._modulus, QQ)

    def contains(self, element):
        return isinstance(element, ANP) and element.mod == self._modulus

    def is_zero(self, element):
        return element.is_zero

    def order(self, element):
        """
        The roots of unity in Q(zeta_N) are the lcm(2, N)-th roots of unity,
        so the order is a divisor of lcm(2, N) or infinite.
        """
        element = self.convert(element)
        if element.is_zero:
            raise ValueError("zero has no multiplicative order.")

        if element ** self._torsion != self._one:
            return np.inf

        for d in divisors(self._torsion):
            if element ** int(d) == self._one:
                return int(d)

    def coefficients(self, element):
        """
        :return: list of degree(Phi_N) rationals, ascending powers of zeta.
        """
        ascending = list(reversed(self.convert(element).to_list()))
        return ascending + [QQ.zero] * (self._degree - len(ascending))

    def serialize(self, element):
        return {"field": "cyclotomic", "N": self._N,
                "coeffs": [str(c) for c in self.coefficients(element)]}

    def deserialize(self, data):

        if data.get("field") != "cyclotomic" or data.get("N") != self._N:
            raise ValueError("not an element of Q(zeta_%d)." % self._N)

        return self.element(data["coeffs"])

    def to_dict(self):
        return {"field": "cyclotomic", "N": self._N}

    def _reduce(self, descending):
        reduced = dup_rem(dup_strip(descending), self._modulus, QQ)
        return ANP(reduced, self._modulus, QQ)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.N == self._N

    def __hash__(self):
        return hash(("cyclotomic", self._N))

    def __str__(self):
        return "Q(zeta_%d)" % self._N

    def __repr__(self):
        return "CyclotomicField(%d)" % self._N

    @staticmethod
    def __check_order(N):

        if not isinstance(N, numbers.Integral):
            raise TypeError("N must be an integer.")

        if N < 1:
            raise ValueError("N must be a positive integer.")
