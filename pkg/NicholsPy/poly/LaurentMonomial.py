import numbers


class LaurentMonomial(object):
    """
    A monomial prod p_ij^{e_ij} in the braiding variables p_ij, with integer
    (possibly negative) exponents. Immutable and hashable; zero exponents are
    never stored, so equal monomials have equal exponent maps.
    """
    def __init__(self, exponents=None):
        """
        :param exponents: Map (i, j) -> integer exponent of p_ij. Absent
            variables have exponent 0.
        :type exponents: dict or None
        """
        if exponents is None:
            exponents = {}

        self.__check_exponents(exponents)

        self._exponents = tuple(sorted(((int(i), int(j)), int(e))
                                       for (i, j), e in exponents.items()
                                       if e != 0))

    @classmethod
    def one(cls):
        return cls()

    @classmethod
    def variable(cls, i, j, exponent=1):
        return cls({(i, j): exponent})

    @classmethod
    def from_json(cls, exps):
        """
        :param exps: List of [i, j, e] triples.
        """
        exponents = {}
        for i, j, e in exps:
            exponents[(i, j)] = exponents.get((i, j), 0) + e
        return cls(exponents)

    def exponent(self, i, j):
        return dict(self._exponents).get((i, j), 0)

    def items(self):
        """
        :return: tuple of ((i, j), e) pairs sorted by (i, j).
        """
        return self._exponents

    def variables(self):
        return [key for key, _ in self._exponents]

    def total_degree(self):
        return sum(e for _, e in self._exponents)

    def is_one(self):
        return not self._exponents

    def is_polynomial(self):
        """
        :return: True if no exponent is negative.
        """
        return all(e > 0 for _, e in self._exponents)

    def lex_greater(self, other):
        """
        Lexicographic monomial order with p_11 > p_12 > ... > p_nn: self is
        greater when the smallest variable occurring in self/other has a
        positive exponent there.
        """
        quotient = self / other
        if quotient.is_one():
            return False
        return quotient.items()[0][1] > 0

    def sort_key(self):
        return (self.total_degree(), self._exponents)

    def to_json(self):
        return [[i, j, e] for (i, j), e in self._exponents]

    def __mul__(self, other):
        if not isinstance(other, LaurentMonomial):
            return NotImplemented

        exponents = dict(self._exponents)
        for key, e in other.items():
            exponents[key] = exponents.get(key, 0) + e
        return LaurentMonomial(exponents)

    def __truediv__(self, other):
        if not isinstance(other, LaurentMonomial):
            return NotImplemented

        return self * other ** -1

    def __pow__(self, power):
        if not isinstance(power, numbers.Integral):
            raise TypeError("monomial powers must be integers.")

        return LaurentMonomial({key: e * power for key, e in self._exponents})

    def __eq__(self, other):
        if not isinstance(other, LaurentMonomial):
            return NotImplemented
        return self._exponents == other.items()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._exponents)

    def __str__(self):
        if self.is_one():
            return "1"

        # Diagonal variables first, then p_ij with i != j in (i, j) order.
        ordered = sorted(self._exponents, key=lambda item: item[0][0] !=
                         item[0][1])

        factors = []
        for (i, j), e in ordered:
            if e == 1:
                factors.append("p[%d][%d]" % (i, j))
            else:
                factors.append("p[%d][%d]^%d" % (i, j, e))
        return "*".join(factors)

    def __repr__(self):
        return "LaurentMonomial(%s)" % dict(self._exponents)

    @staticmethod
    def __check_exponents(exponents):

        if not isinstance(exponents, dict):
            raise TypeError("exponents must be a dict (i, j) -> int.")

        for key, e in exponents.items():
            if not isinstance(key, tuple) or len(key) != 2:
                raise TypeError("monomial keys must be index pairs (i, j).")

            if not isinstance(e, numbers.Integral):
                raise TypeError("monomial exponents must be integers.")

            if key[0] < 1 or key[1] < 1:
                raise ValueError("variable indices start at 1.")
