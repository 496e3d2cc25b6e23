import numbers

import numpy as np

from NicholsPy.shuffle.BraidingMatrix import BraidingMatrix
from NicholsPy.words.DegreeVector import DegreeVector


class ExponentBraiding(object):
    """
    A braiding q_ij = q^{a_ij} given by an integer exponent matrix a, with q
    either a primitive N-th root of unity or transcendental (q = t in Q(t)).

    For q not a root of unity, P_m(q) = 0 exactly when K(m) = lambda(m)
    outside a few exceptional degree families, where
    K(m) = sum_ij a_ij m_i m_j and lambda(m) = sum_i a_ii m_i.
    """
    ROOT_OF_UNITY = "root-of-unity"
    TRANSCENDENTAL = "transcendental"

    def __init__(self, exponents, N=None):
        """
        :param exponents: Square integer matrix a.
        :type exponents: list(list(int)) or ndarray
        :param N: Order of q; None for transcendental q.
        :type N: int or None
        """
        self.__check_init_parameters(exponents, N)

        self._exponents = np.array(exponents, dtype=np.int64)
        self._exponents.setflags(write=False)
        self._N = N

    @classmethod
    def family(cls, a, b, N=None):
        """
        The two-parameter family q_11 = q_22 = q^a, q_12 q_21 = q^{-b},
        realized with a_12 = -b and a_21 = 0.
        """
        return cls([[a, -b], [0, a]], N)

    @property
    def exponents(self):
        return self._exponents

    @property
    def n(self):
        return self._exponents.shape[0]

    @property
    def N(self):
        return self._N

    @property
    def mode(self):
        if self._N is None:
            return self.TRANSCENDENTAL
        return self.ROOT_OF_UNITY

    def braiding(self):
        """
        :return: BraidingMatrix over Q(zeta_N) or Q(t).
        """
        if self._N is None:
            return BraidingMatrix.transcendental(self._exponents)
        return BraidingMatrix.cyclotomic(self._exponents, self._N)

    def K_lambda(self, m):
        """
        :return: (K(m), lambda(m)) as Python ints.
        """
        m = self.__degree(m)
        entries = m.entries

        K = int(entries.dot(self._exponents).dot(entries))
        lam = int(np.diag(self._exponents).dot(entries))
        return K, lam

    @staticmethod
    def is_exceptional_degree(m):
        """
        True for m = k e_i (k >= 2), m = 2 e_i + 2k e_j (k >= 1),
        m = 3 e_i + 3 e_j and m = 4 e_i + 4 e_j. P_m(q) never vanishes there
        when q is not a root of unity.
        """
        if not isinstance(m, DegreeVector):
            m = DegreeVector(m)

        if m.total() < 2:
            raise ValueError("exceptional degrees need |m| >= 2.")

        support = m.support()
        if len(support) == 1:
            return True

        if len(support) != 2:
            return False

        low, high = sorted(m[i - 1] for i in support)
        if low == 2 and high % 2 == 0:
            return True

        return low == high and low in (3, 4)

    def diophantine_search(self, box):
        """
        All m in {0, ..., box}^n with |m| >= 2, m not exceptional and
        K(m) = lambda(m), in graded lexicographic order. An empty result
        certifies P_m(q) != 0 for every m in the box.

        :param box: Bound on every coordinate.
        :type box: int
        :return: list(DegreeVector)
        """
        if self.mode != self.TRANSCENDENTAL:
            raise ValueError("criterion requires q not a root of unity")

        if not isinstance(box, numbers.Integral) or isinstance(box, bool):
            raise TypeError("box must be an integer.")

        if box < 1:
            raise ValueError("box must be at least 1.")

        axes = [np.arange(box + 1, dtype=np.int64)] * self.n
        grid = np.stack(np.meshgrid(*axes, indexing="ij"),
                        axis=-1).reshape(-1, self.n)

        K = np.einsum("ki,ij,kj->k", grid, self._exponents, grid)
        lam = grid.dot(np.diag(self._exponents))
        candidates = grid[(grid.sum(axis=1) >= 2) & (K == lam)]

        solutions = [DegreeVector(row) for row in candidates
                     if not self.is_exceptional_degree(DegreeVector(row))]
        solutions.sort(key=lambda m: m.sort_key())
        return solutions

    def to_dict(self):
        return {"mode": self.mode, "N": self._N,
                "exponents": self._exponents.tolist()}

    def __repr__(self):
        return "ExponentBraiding(%s, mode=%s)" % (self._exponents.tolist(),
                                                  self.mode)

    def __degree(self, m):

        if not isinstance(m, DegreeVector):
            m = DegreeVector(m)

        if m.n != self.n:
            raise ValueError("degree %s does not match %d exponents." %
                             (m, self.n))
        return m

    @staticmethod
    def __check_init_parameters(exponents, N):

        exponents = np.asarray(exponents)
        if exponents.ndim != 2 or exponents.shape[0] != exponents.shape[1] \
                or exponents.shape[0] < 1:
            raise ValueError("exponents must be a square integer matrix.")

        if not np.issubdtype(exponents.dtype, np.integer):
            raise TypeError("exponents must be integers.")

        if N is not None:
            if not isinstance(N, numbers.Integral) or isinstance(N, bool):
                raise TypeError("N must be an integer.")

            if N < 1:
                raise ValueError("N must be at least 1.")
