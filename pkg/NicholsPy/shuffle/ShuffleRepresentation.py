import collections
import sys
import timeit

import numpy as np
from sympy import divisors

from NicholsPy.field.OperatorMatrix import OperatorMatrix
from NicholsPy.poly.LaurentMonomial import LaurentMonomial
from NicholsPy.poly.PmFamily import a_form, q_integer, q_monomial
from NicholsPy.words.DegreeVector import DegreeVector
from NicholsPy.words.LyndonWords import divisor_lyndon_sum, \
    lyndon_count, lyndon_factor_power
from NicholsPy.words.Word import Word
from .BraidingMatrix import BraidingMatrix
from .HomogeneousComponent import HomogeneousComponent
from .MonomialOperator import MonomialOperator


Orbit = collections.namedtuple("Orbit", ["representative", "words"])


class ShuffleRepresentation(object):
    """
    The representation of the braid monoid on the homogeneous components
    V_m of the tensor algebra of a braided vector space of diagonal type,
    together with the shuffle operators S_{1,k}, the symmetrizer S_m and the
    two cyclic operators 1 - s_{k}...s_1 and 1 - s_{k}...s_2 s_1^2.
    """
    def __init__(self, braiding, verbose=False):
        """
        :param braiding: The braiding matrix q.
        :type braiding: BraidingMatrix
        :param verbose: Print matrix sizes and timings to stderr.
        :type verbose: bool
        """
        self.__check_init_parameters(braiding, verbose)

        self._braiding = braiding
        self._context = braiding.context
        self._verbose = verbose
        self._components = {}

    @property
    def braiding(self):
        return self._braiding

    @property
    def context(self):
        return self._context

    def component(self, m):
        """
        :return: The cached HomogeneousComponent V_m.
        """
        m = self.__degree(m)
        if m not in self._components:
            self._components[m] = HomogeneousComponent(m)
            self.__log("V_%s: dimension %d" %
                       (m, self._components[m].dimension))
        return self._components[m]

    def sigma(self, i, m):
        """
        :return: MonomialOperator of sigma_i on V_m.
        """
        component = self.component(m)
        if not 1 <= i <= component.length - 1:
            raise ValueError("sigma_%d is not defined on words of length %d."
                             % (i, component.length))

        return MonomialOperator.sigma(component, self._braiding, i)

    def sigma_matrix(self, i, m):
        return self.sigma(i, m).to_matrix()

    def braid_operator(self, generators, m):
        """
        :param generators: Indices (i_1, ..., i_r) of sigma_{i_1}...sigma_{i_r}.
        :return: MonomialOperator of the product; sigma_{i_r} acts first.
        """
        result = MonomialOperator.identity(self.component(m), self._context)
        for i in generators:
            result = result.compose(self.sigma(i, m))
        return result

    def braid_matrix(self, generators, m):
        return self.braid_operator(generators, m).to_matrix()

    def shuffle_terms(self, k, m, shift=0):
        """
        The terms T_0 = 1 and T_j = sigma_{j+s} T_{j-1} of
        tau^s(S_{1,k}) = T_0 + ... + T_k.
        """
        component = self.component(m)
        if k < 0 or k + shift > component.length - 1:
            raise ValueError("S_{1,%d} shifted by %d does not act on words of "
                             "length %d." % (k, shift, component.length))

        terms = [MonomialOperator.identity(component, self._context)]
        for j in range(1, k + 1):
            terms.append(self.sigma(j + shift, m).compose(terms[-1]))
        return terms

    def s1_matrix(self, k, m, shift=0):
        """
        :return: The matrix of tau^shift(S_{1,k}) on V_m.
        """
        component = self.component(m)
        matrix = OperatorMatrix.zeros(self._context, component.dimension,
                                      basis=component.basis)
        for term in self.shuffle_terms(k, m, shift):
            term.scatter_into(matrix.array)
        return matrix

    def symmetrizer_matrix(self, m):
        """
        S_m = S_{1,|m|-1} tau(S_{1,|m|-2}) ... tau^{|m|-2}(S_{1,1}), multiplied
        out from the right.
        """
        component = self.component(m)
        length = component.length
        if length < 2:
            raise ValueError("the symmetrizer needs |m| >= 2.")

        start_time = timeit.default_timer()

        result = self.s1_matrix(1, m, shift=length - 2).array
        for shift in range(length - 3, -1, -1):
            product = None
            for term in self.shuffle_terms(length - 1 - shift, m, shift):
                image = term.apply_left(result)
                product = image if product is None else product + image
            result = product

        self.__log("S_%s built in %.3f s" %
                   (component.degree, timeit.default_timer() - start_time))
        return OperatorMatrix(result, self._context, component.basis)

    def cycle_operator(self, m):
        """
        :return: MonomialOperator of sigma_{|m|-1} ... sigma_1.
        """
        length = self.component(m).length
        return self.shuffle_terms(length - 1, m)[-1]

    def cycle2_operator(self, m):
        """
        :return: MonomialOperator of sigma_{|m|-1} ... sigma_2 sigma_1^2.
        """
        if self.component(m).length < 2:
            raise ValueError("the second cyclic operator needs |m| >= 2.")

        return self.cycle_operator(m).compose(self.sigma(1, m))

    def cycle_matrix(self, m):
        return self.__one_minus(self.cycle_operator(m))

    def cycle2_matrix(self, m):
        return self.__one_minus(self.cycle2_operator(m))

    def braid_identity_check(self, k, m):
        """
        Checks (1 - s_k...s_1) S_{1,k} = S_{1,k-1} (1 - s_k...s_2 s_1^2) on V_m.

        Both sides are sums of monomial operators, so they are compared as
        sparse matrices without forming the dense products.
        """
        component = self.component(m)
        if not 1 <= k <= component.length - 1:
            raise ValueError("k must lie in 1..|m|-1.")

        terms = self.shuffle_terms(k, m)
        lower = terms[:-1]
        cycle = terms[-1]
        cycle2 = cycle.compose(self.sigma(1, m))

        left = self.__sparse_entries(terms,
                                     [cycle.compose(term) for term in terms])
        right = self.__sparse_entries(lower,
                                      [term.compose(cycle2) for term in lower])
        return left == right

    def q_value(self, m):
        """
        :return: Q_m(q).
        """
        return self._context.evaluate_monomial(q_monomial(m), self._braiding)

    def q_root_value(self, m, k):
        """
        :return: Q_m(q)^{N(m)/k}, read off the exponents m_i(m_i - 1) and
            m_i m_j divided by k. Equals 1 when |m| = 1.
        """
        m = self.__degree(m)
        exponents = {}
        for i in range(1, m.n + 1):
            exponents[(i, i)] = m[i - 1] * (m[i - 1] - 1)
            for j in range(i + 1, m.n + 1):
                exponents[(i, j)] = m[i - 1] * m[j - 1]
                exponents[(j, i)] = m[i - 1] * m[j - 1]

        if any(e % k for e in exponents.values()):
            raise ValueError("Q_m^{N(m)/%d} is not a monomial." % k)

        monomial = LaurentMonomial({key: e // k
                                    for key, e in exponents.items()})
        return self._context.evaluate_monomial(monomial, self._braiding)

    def cycle_det(self, m):
        """
        Closed form prod_{k | gcd(m)} (1 - Q_m(q)^{N(m)/k})^{l_{m/k}}.
        """
        m = self.__degree(m)
        return self.__cyclic_det([m])

    def cycle2_det(self, m):
        """
        Closed form over i with m_i > 0 and k | gcd(m - e_i) of
        (1 - Q_m(q)^{N(m)/k})^{l_{(m - e_i)/k}}.
        """
        m = self.__degree(m)
        if m.total() < 2:
            raise ValueError("the second cyclic operator needs |m| >= 2.")

        return self.__cyclic_det([m.minus_unit(i) for i in m.support()], m)

    def cycle_corank(self, m):
        """
        sum of l_{m/k} over k | gcd(m) with k | N(m)/d, d the order of
        Q_m(q); zero when d does not divide N(m).
        """
        m = self.__degree(m)
        if m.total() == 1:
            return 1

        d_prime = self.d_prime(m)
        if d_prime is None:
            return 0
        return divisor_lyndon_sum(m, d_prime)

    def cycle2_corank(self, m):
        """
        sum over i with m_i > 0 of the l_{(m - e_i)/k} with
        k | gcd(m - e_i) and k | N(m)/d.
        """
        m = self.__degree(m)
        if m.total() < 2:
            raise ValueError("the second cyclic operator needs |m| >= 2.")

        d_prime = self.d_prime(m)
        if d_prime is None:
            return 0
        return sum(divisor_lyndon_sum(m.minus_unit(i), d_prime)
                   for i in m.support())

    def d_prime(self, m):
        """
        :return: N(m)/d with d = ord(Q_m(q)), or None when d does not divide
            N(m).
        """
        m = self.__degree(m)
        d = self._context.order(self.q_value(m))
        big_n = m.bigN()
        if d == np.inf or big_n % d:
            return None
        return big_n // int(d)

    def shuffle_det(self, k, m):
        """
        :return: det S_{1,k}|V_m by elimination.
        """
        start_time = timeit.default_timer()
        det = self.s1_matrix(k, m).det()
        self.__log("det S_{1,%d}|V_%s in %.3f s" %
                   (k, self.__degree(m), timeit.default_timer() - start_time))
        return det

    def detshuffle_recursion_check(self, m):
        """
        Checks det S_{1,|m|-1}|V_m = A_m(q) prod_{i: m_i > 0}
        det S_{1,|m|-2}|V_{m - e_i} with all determinants by elimination.
        """
        m = self.__degree(m)
        if len(m.support()) < 2:
            raise ValueError("the determinant recursion needs two nonzero "
                             "entries.")

        length = m.total()
        right = self._context.evaluate(a_form(m).expand(), self._braiding)
        for i in m.support():
            right = right * self.shuffle_det(length - 2, m.minus_unit(i))

        return self.shuffle_det(length - 1, m) == right

    def detshuffle_product_check(self, m):
        """
        Checks det S_{1,|m|-1} det(1 - s...s_1) = det S_{1,|m|-2}
        det(1 - s...s_2 s_1^2) on V_m, all by elimination.
        """
        m = self.__degree(m)
        length = m.total()
        if length < 2:
            raise ValueError("the determinant product needs |m| >= 2.")

        left = self.shuffle_det(length - 1, m) * self.cycle_matrix(m).det()
        right = self.shuffle_det(length - 2, m) * self.cycle2_matrix(m).det()
        return left == right

    def single_letter_check(self, m):
        """
        Checks S_{1,k-1}|V_m = (k)_{q_ii} id for m = k e_i.
        """
        m = self.__degree(m)
        support = m.support()
        if len(support) != 1:
            raise ValueError("single_letter_check needs m = k e_i.")

        i = support[0]
        k = m.total()
        expected = OperatorMatrix.identity(self._context, 1) * \
            q_integer(k, self._braiding.entry(i, i))
        return self.s1_matrix(k - 1, m) == expected

    @staticmethod
    def orbit_decomposition(m, action="rotate"):
        """
        Orbits of X_m under i_1...i_m -> i_2...i_m i_1 ("rotate") or under
        i_1 i_2...i_m -> i_1 i_3...i_m i_2 ("fix-first-rotate").

        :return: list of Orbit(representative, words); the representative is
            (v, k) with v^k the unique necklace of the orbit, or (j, v, k)
            with j v^k the unique such word of the orbit.
        """
        if not isinstance(m, DegreeVector):
            m = DegreeVector(m)

        if action not in ("rotate", "fix-first-rotate"):
            raise ValueError("unknown action '%s'." % action)

        if m.is_zero():
            raise ValueError("orbits need a nonzero degree.")

        if action == "fix-first-rotate" and m.total() < 2:
            raise ValueError("fix-first-rotate needs |m| >= 2.")

        component = HomogeneousComponent(m)
        seen = set()
        orbits = []
        for word in component.basis:
            if word in seen:
                continue

            if action == "rotate":
                members = {word.rotate(s) for s in range(len(word))}
                necklace = min(members)
                representative = lyndon_factor_power(necklace)
            else:
                tail = Word(word[1:])
                members = {Word(word[:1]) + tail.rotate(s)
                           for s in range(len(tail))}
                necklace = min(tail.rotate(s) for s in range(len(tail)))
                representative = (word[0],) + lyndon_factor_power(necklace)

            seen.update(members)
            orbits.append(Orbit(representative, sorted(members)))
        return orbits

    def __cyclic_det(self, degrees, m=None):

        context = self._context
        result = context.one()
        for lower in degrees:
            for k in divisors(lower.gcd()):
                count = lyndon_count(lower.divide(k))
                value = self.q_root_value(lower if m is None else m, k)
                result = result * (context.one() - value) ** count
        return result

    def __sparse_entries(self, added, subtracted):
        """
        :return: dict (row, column) -> nonzero entry of the sum of the added
            operators minus the sum of the subtracted ones.
        """
        context = self._context
        entries = {}
        for negate, operators in ((False, added), (True, subtracted)):
            for operator in operators:
                for column, (row, scale) in enumerate(zip(operator.targets,
                                                          operator.scales)):
                    key = (int(row), column)
                    value = entries.get(key, context.zero())
                    entries[key] = value - scale if negate else value + scale

        return {key: value for key, value in entries.items()
                if not context.is_zero(value)}

    def __one_minus(self, operator):

        basis = operator.component.basis
        identity = OperatorMatrix.identity(self._context, len(basis), basis)
        return identity - operator.to_matrix()

    def __degree(self, m):

        if isinstance(m, DegreeVector):
            if m.n != self._braiding.n:
                raise ValueError("degree %s does not match a braiding of size "
                                 "%d." % (m, self._braiding.n))
            return m

        return self.__degree(DegreeVector(m))

    def __log(self, message):

        if self._verbose:
            sys.stderr.write(message + "\n")

    @staticmethod
    def __check_init_parameters(braiding, verbose):

        if not isinstance(braiding, BraidingMatrix):
            raise TypeError("braiding must be a BraidingMatrix.")

        if not isinstance(verbose, bool):
            raise TypeError("verbose must be a bool.")
