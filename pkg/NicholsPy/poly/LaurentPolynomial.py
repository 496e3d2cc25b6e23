import functools
import numbers

from sympy import Poly, symbols

from .LaurentMonomial import LaurentMonomial


class LaurentPolynomial(object):
    """
    Integer Laurent polynomial in the variables p_ij, stored as a dictionary
    {LaurentMonomial : coefficient} without zero coefficients.
    """
    def __init__(self, terms=None):
        """
        :param terms: Map from monomials to integer coefficients.
        :type terms: dict or None
        """
        if terms is None:
            terms = {}

        self.__check_terms(terms)

        self._terms = {monomial: int(coeff) for monomial, coeff in terms.items()
                       if coeff != 0}

    @classmethod
    def constant(cls, value):
        return cls({LaurentMonomial.one(): value})

    @classmethod
    def variable(cls, i, j):
        return cls({LaurentMonomial.variable(i, j): 1})

    @classmethod
    def from_monomial(cls, monomial, coeff=1):
        return cls({monomial: coeff})

    @classmethod
    def from_json(cls, data):
        """
        :param data: List of {"coeff": c, "exps": [[i, j, e], ...]} records.
        """
        result = cls()
        for term in data:
            result = result + cls({LaurentMonomial.from_json(term["exps"]):
                                   term["coeff"]})
        return result

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, monomial):
        return self._terms.get(monomial, 0)

    def is_zero(self):
        return not self._terms

    def is_polynomial(self):
        """
        :return: True if the polynomial lies in Z[p_ij].
        """
        return all(monomial.is_polynomial() or monomial.is_one()
                   for monomial in self._terms)

    def sorted_monomials(self):
        """
        :return: Monomials in ascending graded order, constant term first.
        """
        return sorted(self._terms, key=lambda monomial: monomial.sort_key())

    def leading_term(self):
        return self.__extreme_term(max)

    def trailing_term(self):
        return self.__extreme_term(min)

    def exact_divide(self, divisor):
        """
        Division by a nonzero Laurent polynomial that must leave no remainder.

        Runs multivariate division in lexicographic order. For an exact
        quotient h the degree range of f in each variable is the sum of the
        ranges of g and h, so every quotient term lies in a finite box and
        the loop stops as soon as a step leaves it.

        :param divisor: Nonzero polynomial g.
        :return: The polynomial h with f = g * h.
        """
        if not isinstance(divisor, LaurentPolynomial):
            raise TypeError("divisor must be a LaurentPolynomial.")

        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial.")

        if self.is_zero():
            return LaurentPolynomial()

        lead_monomial, lead_coeff = divisor.leading_term()
        box = self.__quotient_box(divisor)

        quotient = LaurentPolynomial()
        remainder = self
        while not remainder.is_zero():
            monomial, coeff = remainder.leading_term()
            step = monomial / lead_monomial

            if not self.__inside(step, box) or coeff % lead_coeff:
                raise ValueError("%s is not divisible by %s." %
                                 (self, divisor))

            term = LaurentPolynomial({step: coeff // lead_coeff})
            quotient = quotient + term
            remainder = remainder - term * divisor

        return quotient

    def divides(self, other):
        """
        :return: True if self divides other exactly.
        """
        try:
            other.exact_divide(self)
        except ValueError:
            return False
        return True

    def specialize(self, weights):
        """
        Substitutes p_ij -> t^{w_ij} and clears the negative powers of t.

        :param weights: Map (i, j) -> integer weight.
        :return: sympy Poly in t over ZZ.
        """
        exponents = {}
        for monomial, coeff in self._terms.items():
            degree = sum(weights[key] * e for key, e in monomial.items())
            exponents[degree] = exponents.get(degree, 0) + coeff

        t = symbols("t")
        if not exponents:
            return Poly(0, t, domain="ZZ")

        shift = min(exponents)
        return Poly.from_dict({(degree - shift,): coeff
                               for degree, coeff in exponents.items()},
                              t, domain="ZZ")

    def to_json(self):
        return [{"coeff": self._terms[monomial], "exps": monomial.to_json()}
                for monomial in self.sorted_monomials()]

    def __add__(self, other):
        other = self.__coerce(other)
        if other is NotImplemented:
            return other

        terms = dict(self._terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({monomial: -coeff
                                  for monomial, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self.__coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.__coerce(other)
        if other is NotImplemented:
            return other

        terms = {}
        for monomial, coeff in self._terms.items():
            for other_monomial, other_coeff in other.terms.items():
                product = monomial * other_monomial
                terms[product] = terms.get(product, 0) + coeff * other_coeff
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral):
            raise TypeError("polynomial powers must be integers.")

        if power < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers.")
            (monomial, coeff), = self._terms.items()
            if abs(coeff) != 1:
                raise ValueError("only unit monomials have negative powers.")
            return LaurentPolynomial({monomial ** power: coeff ** -power})

        result = LaurentPolynomial.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        other = self.__coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if self.is_zero():
            return "0"

        pieces = []
        for position, monomial in enumerate(self.sorted_monomials()):
            coeff = self._terms[monomial]
            if monomial.is_one():
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = str(monomial)
            else:
                body = "%d*%s" % (abs(coeff), monomial)

            if position == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return "LaurentPolynomial('%s')" % self

    def degree_range(self, key):
        """
        :return: (min, max) exponent of the variable key = (i, j) over all
            terms; absent variables count as exponent 0.
        """
        exponents = [dict(monomial.items()).get(key, 0)
                     for monomial in self._terms]
        return min(exponents), max(exponents)

    def __quotient_box(self, divisor):

        keys = set()
        for polynomial in (self, divisor):
            for monomial in polynomial.terms:
                keys.update(monomial.variables())

        box = {}
        for key in keys:
            low_f, high_f = self.degree_range(key)
            low_g, high_g = divisor.degree_range(key)
            box[key] = (low_f - low_g, high_f - high_g)
        return box

    @staticmethod
    def __inside(monomial, box):

        for key, (low, high) in box.items():
            if not low <= monomial.exponent(*key) <= high:
                return False

        return all(key in box for key in monomial.variables())

    def __extreme_term(self, pick):

        if self.is_zero():
            raise ValueError("the zero polynomial has no terms.")

        def compare(a, b):
            if a.lex_greater(b):
                return 1
            if b.lex_greater(a):
                return -1
            return 0

        monomial = pick(self._terms, key=functools.cmp_to_key(compare))
        return monomial, self._terms[monomial]

    @staticmethod
    def __coerce(other):

        if isinstance(other, LaurentPolynomial):
            return other

        if isinstance(other, LaurentMonomial):
            return LaurentPolynomial({other: 1})

        if isinstance(other, numbers.Integral):
            return LaurentPolynomial.constant(other)

        return NotImplemented

    @staticmethod
    def __check_terms(terms):

        if not isinstance(terms, dict):
            raise TypeError("terms must be a dict monomial -> int.")

        for monomial, coeff in terms.items():
            if not isinstance(monomial, LaurentMonomial):
                raise TypeError("term keys must be LaurentMonomials.")

            if not isinstance(coeff, numbers.Integral):
                raise TypeError("coefficients must be integers.")
