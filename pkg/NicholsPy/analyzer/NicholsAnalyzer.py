import numbers
import sys
import timeit
import warnings

import numpy as np

from NicholsPy.poly.CyclotomicProductForm import CyclotomicProductForm
from NicholsPy.poly.PmFamily import a_form, p_factor_form, p_poly
from NicholsPy.shuffle.BraidingMatrix import BraidingMatrix
from NicholsPy.shuffle.ShuffleRepresentation import ShuffleRepresentation
from NicholsPy.words.DegreeVector import DegreeVector
from NicholsPy.words.LyndonWords import divisor_lyndon_sum
from .FreenessReport import FreenessReport
from .HypothesisError import HypothesisError
from .KernelReport import KernelReport


class NicholsAnalyzer(object):
    """
    Decides, degree by degree, whether the Nichols algebra of a braided
    vector space of diagonal type is free up to a degree bound, and computes
    the kernel of the shuffle map at the first degrees where it is not.

    Degrees are swept grade by grade. Inside a grade the degrees are split
    over MPI ranks when mpi4py is available, and the values are gathered on
    every rank before the next grade starts.
    """
    def __init__(self, braiding, verbose=False):
        """
        :param braiding: The braiding matrix q.
        :type braiding: BraidingMatrix
        :param verbose: Whether to print progress to stderr (rank 0 only).
        :type verbose: bool
        """
        # Detect whether we have access to multiple CPUs.
        self.__detect_parallelization()

        self.__check_init_parameters(braiding, verbose)

        self._braiding = braiding
        self._context = braiding.context
        self._verbose = verbose and self._cpu_rank == 0

        self._representation = ShuffleRepresentation(braiding,
                                                     self._verbose)

        # P_m(q) for every degree evaluated so far.
        self._p_values = {}

    @property
    def braiding(self):
        return self._braiding

    @property
    def representation(self):
        return self._representation

    def p_value(self, m):
        """
        :return: P_m(q), cached.
        """
        m = self.__degree(m)
        if m not in self._p_values:
            self._p_values[m] = self._context.evaluate(p_poly(m),
                                                       self._braiding)
        return self._p_values[m]

    def is_degenerate(self, m):
        """
        :return: Whether P_m(q) = 0.
        """
        return self._context.is_zero(self.p_value(m))

    def freeness_check(self, max_degree):
        """
        Evaluates P_m(q) for all m with 2 <= |m| <= max_degree.

        :param max_degree: The degree bound D >= 2.
        :type max_degree: int
        :return: FreenessReport
        """
        self.__check_max_degree(max_degree)

        start_time = timeit.default_timer()
        degrees = self._sweep(max_degree)
        witnesses = self.minimal_degenerate_degrees(max_degree)

        values = [(m, self._context.serialize(self._p_values[m]),
                   self.is_degenerate(m)) for m in degrees]

        self.__log("swept %d degrees up to %d in %.3f s, %d witnesses" %
                   (len(degrees), max_degree,
                    timeit.default_timer() - start_time, len(witnesses)))

        if not witnesses:
            warnings.warn(UserWarning("P_m(q) != 0 was only checked for "
                                      "|m| <= %d." % max_degree))

        return FreenessReport(max_degree, witnesses, values)

    def minimal_degenerate_degrees(self, max_degree):
        """
        :return: The m with |m| <= max_degree, P_m(q) = 0 and P_l(q) != 0
            for every l < m with |l| >= 2, in sweep order.
        """
        self.__check_max_degree(max_degree)

        zeros = [m for m in self._sweep(max_degree) if self.is_degenerate(m)]
        return [m for m in zeros if not any(l < m for l in zeros)]

    def check_hypotheses(self, m):
        """
        Raises HypothesisError unless P_m(q) = 0 and P_l(q) != 0 for all
        l < m with |l| >= 2.
        """
        m = self.__degree(m)
        if m.total() < 2:
            raise ValueError("kernel statements need |m| >= 2.")

        for l in sorted(m.strictly_below(), key=lambda l: l.sort_key()):
            if self.is_degenerate(l):
                raise HypothesisError("hypothesis violated: P_l(q) = 0 at "
                                      "l = %s < m = %s." % (l, m),
                                      l, "P_l(q) == 0 for l < m")

        if not self.is_degenerate(m):
            raise HypothesisError("hypothesis violated: P_m(q) != 0 at "
                                  "m = %s." % m, m, "P_m(q) != 0")

    def n1_n2(self, m):
        """
        With d the order of Q_m(q) and d' = N(m)/d:
        n1 = sum over i with m_i > 0 of the l_{(m - e_i)/k}, k | d',
        n2 = sum of the l_{m/k}, k | d'.

        :return: (n1, n2, d, d')
        """
        m = self.__degree(m)
        if m.total() < 2:
            raise ValueError("n1 and n2 need |m| >= 2.")

        if not self.is_degenerate(m):
            raise HypothesisError("hypothesis violated: P_m(q) != 0 at "
                                  "m = %s." % m, m, "P_m(q) != 0")

        d = self.__q_order(m)
        big_n = m.bigN()
        if big_n % d:
            raise HypothesisError("order %d of Q_m(q) does not divide "
                                  "N(m) = %d." % (d, big_n), m,
                                  "ord(Q_m(q)) does not divide N(m)")

        d_prime = big_n // d
        n1 = sum(divisor_lyndon_sum(m.minus_unit(i), d_prime)
                 for i in m.support())
        n2 = divisor_lyndon_sum(m, d_prime)
        return n1, n2, d, d_prime

    def kernel_dim(self, m, verify=False, relations=False):
        """
        dim ker S_{1,|m|-1}|V_m = n1 - n2 at a minimal degenerate degree.

        :param m: Degree satisfying check_hypotheses.
        :param verify: Also compute the kernel by elimination.
        :type verify: bool
        :param relations: Also compute dim ker S_m|V_m by elimination.
        :type relations: bool
        :return: KernelReport
        """
        m = self.__degree(m)
        self.check_hypotheses(m)

        n1, n2, d, d_prime = self.n1_n2(m)
        report = KernelReport(m, d, d_prime, n1, n2)

        if verify:
            start_time = timeit.default_timer()
            matrix = self._representation.s1_matrix(m.total() - 1, m)
            report.kernel_dim_bruteforce = matrix.kernel_dim()
            self.__log("ker S_{1,%d}|V_%s: %d in %.3f s" %
                       (m.total() - 1, m, report.kernel_dim_bruteforce,
                        timeit.default_timer() - start_time))

        if relations:
            matrix = self._representation.symmetrizer_matrix(m)
            report.relation_dim = matrix.kernel_dim()

        if not report.is_consistent():
            raise RuntimeError("kernel dimensions at %s disagree: %s." %
                               (m, report.to_dict()))
        return report

    def relation_dims(self, max_degree):
        """
        :return: dict m -> dim ker S_m|V_m for 2 <= |m| <= max_degree, in
            sweep order.
        """
        self.__check_max_degree(max_degree)

        dims = {}
        for total in range(2, max_degree + 1):
            degrees = DegreeVector.graded(self._braiding.n, total)
            local = [self._representation.symmetrizer_matrix(m).kernel_dim()
                     for m in self.__cpu_share(degrees)]
            for m, dim in zip(self.__cpu_order(degrees),
                              self._gather_lists(local)):
                dims[m] = dim

        return {m: dims[m] for m in
                DegreeVector.all_upto(self._braiding.n, max_degree)}

    def det_zero_check(self, m):
        """
        Checks both determinant criteria on V_m:
        P_m(q) = 0 implies det S_{1,|m|-1} = 0, and det S_{1,|m|-2} != 0
        together with det S_{1,|m|-1} = 0 implies P_m(q) = 0.
        """
        m = self.__degree(m)
        if m.total() < 2:
            raise ValueError("the determinant criterion needs |m| >= 2.")

        context = self._context
        upper = context.is_zero(
            self._representation.shuffle_det(m.total() - 1, m))
        lower = context.is_zero(
            self._representation.shuffle_det(m.total() - 2, m))
        degenerate = self.is_degenerate(m)

        if degenerate and not upper:
            return False
        if upper and not lower and not degenerate:
            return False
        return True

    def vanishing_factor(self, m):
        """
        At a degenerate m returns d = ord(Q_m(q)) after checking that
        Q_m(q)^{N(m)} = 1 and that Phi_d(Q_m) is the only factor of P_m
        vanishing at q.
        """
        m = self.__degree(m)
        if not self.is_degenerate(m):
            raise HypothesisError("hypothesis violated: P_m(q) != 0 at "
                                  "m = %s." % m, m, "P_m(q) != 0")

        value = self._representation.q_value(m)
        d = self.__q_order(m)
        if not self._context.is_one(self._context.power(value, m.bigN())):
            raise RuntimeError("Q_m(q)^N(m) != 1 at m = %s." % m)

        form = p_factor_form(m)
        vanishing = [e for e in form.support() if self._context.is_zero(
            CyclotomicProductForm(form.base, {e: 1}).evaluate(value))]

        if vanishing != [d]:
            raise RuntimeError("factors %s of P_%s vanish, expected "
                               "Phi_%d." % (vanishing, m, d))
        return d

    def multiplicity_check(self, m):
        """
        Checks that Phi_d(Q_m) divides A_m exactly n1 - n2 times at a
        degenerate degree with two nonzero entries.
        """
        n1, n2, d, d_prime = self.n1_n2(m)
        return a_form(self.__degree(m)).multiplicity(d) == n1 - n2

    def _sweep(self, max_degree):
        """
        Evaluates P_m(q) grade by grade up to max_degree.

        :return: The degrees 2 <= |m| <= max_degree in sweep order.
        """
        degrees = []
        for total in range(2, max_degree + 1):
            grade = DegreeVector.graded(self._braiding.n, total)
            missing = [m for m in grade if m not in self._p_values]

            local = [self.p_value(m) for m in self.__cpu_share(missing)]
            for m, value in zip(self.__cpu_order(missing),
                                self._gather_lists(local)):
                self._p_values[m] = value

            zeros = sum(1 for m in grade if self.is_degenerate(m))
            self.__log("grade %d: %d degrees, %d zeros" %
                       (total, len(grade), zeros))
            degrees.extend(grade)
        return degrees

    def _gather_lists(self, this_cpu_list):
        """
        Collects a list from all processes; the result is ordered rank by
        rank.
        """
        if self._num_cpus == 1:
            return this_cpu_list

        gathered_lists = self._comm.allgather(this_cpu_list)

        return [item for items in gathered_lists for item in items]

    def __cpu_share(self, degrees):

        return degrees[self._cpu_rank::self._num_cpus]

    def __cpu_order(self, degrees):

        return [m for rank in range(self._num_cpus)
                for m in degrees[rank::self._num_cpus]]

    def __q_order(self, m):

        d = self._context.order(self._representation.q_value(m))
        if d == np.inf:
            raise HypothesisError("Q_m(q) has infinite order at m = %s." % m,
                                  m, "infinite order")
        return int(d)

    def __detect_parallelization(self):
        """
        Detects whether multiple processors are available and sets
        self._num_cpus and self._cpu_rank accordingly.
        """
        try:
            from mpi4py import MPI
            comm = MPI.COMM_WORLD

            self._num_cpus = comm.size
            self._cpu_rank = comm.rank
            self._comm = comm

        except ImportError:

            self._num_cpus = 1
            self._cpu_rank = 0

    def __degree(self, m):

        if not isinstance(m, DegreeVector):
            m = DegreeVector(m)

        if m.n != self._braiding.n:
            raise ValueError("degree %s does not match a braiding of size "
                             "%d." % (m, self._braiding.n))
        return m

    def __log(self, message):

        if self._verbose:
            sys.stderr.write(message + "\n")

    @staticmethod
    def __check_max_degree(max_degree):

        if not isinstance(max_degree, numbers.Integral) or \
                isinstance(max_degree, bool):
            raise TypeError("the degree bound must be an integer.")

        if max_degree < 2:
            raise ValueError("the degree bound must be at least 2.")

    @staticmethod
    def __check_init_parameters(braiding, verbose):

        if not isinstance(braiding, BraidingMatrix):
            raise TypeError("braiding must be a BraidingMatrix.")

        if not isinstance(verbose, bool):
            raise TypeError("verbose must be a bool.")
