import numbers

import numpy as np

from NicholsPy.field.CyclotomicField import CyclotomicField
from NicholsPy.field.FieldContext import FieldContext
from NicholsPy.field.RationalFunctionField import RationalFunctionField

# Seed of every randomized cross-check unless the caller overrides it.
DEFAULT_SEED = 0x41C4


class BraidingMatrix(object):
    """
    The matrix (q_ij) of a braiding of diagonal type,
    c(x_i (x) x_j) = q_ij x_j (x) x_i, with nonzero entries in an exact field.
    """
    def __init__(self, entries, context, exponents=None):
        """
        :param entries: n x n entries q_ij, anything context.convert accepts.
        :type entries: list(list) or ndarray
        :param context: Field of the entries.
        :type context: FieldContext
        :param exponents: Optional integer matrix a_ij with
            q_ij = generator^{a_ij}.
        :type exponents: ndarray or None
        """
        self.__check_parameters(entries, context, exponents)

        n = len(entries)
        self._context = context
        self._entries = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                entry = context.convert(entries[i][j])
                if context.is_zero(entry):
                    raise ValueError("entries must be nonzero")
                self._entries[i, j] = entry

        self._exponents = None
        if exponents is not None:
            self._exponents = np.array(exponents, dtype=np.int64)

    @classmethod
    def from_exponents(cls, exponents, context):
        """
        q_ij = zeta_N^{a_ij} in a cyclotomic field, t^{a_ij} in Q(t).

        :param exponents: Square integer matrix a.
        :param context: CyclotomicField or RationalFunctionField.
        """
        exponents = np.array(exponents, dtype=np.int64)
        if exponents.ndim != 2 or exponents.shape[0] != exponents.shape[1]:
            raise ValueError("exponents must be a square integer matrix.")

        entries = [[context.generator_power(int(a)) for a in row]
                   for row in exponents]
        return cls(entries, context, exponents)

    @classmethod
    def cyclotomic(cls, exponents, N):
        return cls.from_exponents(exponents, CyclotomicField(N))

    @classmethod
    def transcendental(cls, exponents):
        return cls.from_exponents(exponents, RationalFunctionField())

    @classmethod
    def random_rational(cls, n, seed=DEFAULT_SEED, bound=9):
        """
        A braiding with random nonzero rational entries a/b, |a|, b <= bound.

        :param n: Size of the braiding.
        :param seed: Seed of the numpy RandomState.
        :return: BraidingMatrix over Q.
        """
        random_state = np.random.RandomState(seed)

        context = CyclotomicField(1)
        numerators = random_state.randint(1, bound + 1, size=(n, n))
        signs = random_state.choice([-1, 1], size=(n, n))
        denominators = random_state.randint(1, bound + 1, size=(n, n))

        entries = [["%d/%d" % (signs[i, j] * numerators[i, j],
                               denominators[i, j]) for j in range(n)]
                   for i in range(n)]
        return cls(entries, context)

    @classmethod
    def random_cyclotomic(cls, n, N, seed=DEFAULT_SEED):
        """
        q_ij = zeta_N^{a_ij} with exponents drawn uniformly from 0..N-1.
        """
        random_state = np.random.RandomState(seed)
        exponents = random_state.randint(0, N, size=(n, n))
        return cls.cyclotomic(exponents, N)

    @property
    def n(self):
        return self._entries.shape[0]

    @property
    def context(self):
        return self._context

    @property
    def exponents(self):
        return self._exponents

    @property
    def entries(self):
        return self._entries

    def entry(self, i, j):
        """
        :return: q_ij, 1-based indices.
        """
        return self._entries[i - 1, j - 1]

    def to_dict(self):
        result = {"n": self.n, "field": self._context.to_dict(),
                  "entries": [[self._context.serialize(x) for x in row]
                              for row in self._entries]}
        if self._exponents is not None:
            result["exponents"] = self._exponents.tolist()
        return result

    def __eq__(self, other):
        if not isinstance(other, BraidingMatrix):
            return NotImplemented
        return self._context == other.context and self.n == other.n and \
            all(a == b for a, b in zip(self._entries.flat, other.entries.flat))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "BraidingMatrix(n=%d over %s)" % (self.n, self._context)

    @staticmethod
    def __check_parameters(entries, context, exponents):

        if not isinstance(context, FieldContext):
            raise TypeError("context must be a FieldContext.")

        if not isinstance(entries, (list, tuple, np.ndarray)):
            raise TypeError("entries must be a square list of lists.")

        n = len(entries)
        if n < 1:
            raise ValueError("a braiding needs at least one generator.")

        for row in entries:
            if len(row) != n:
                raise ValueError("entries must form a square matrix.")

        if exponents is not None:
            exponents = np.asarray(exponents)
            if exponents.shape != (n, n):
                raise ValueError("exponents must match the entry shape.")
            if not all(isinstance(a, (numbers.Integral, np.integer))
                       for a in exponents.flat):
                raise TypeError("exponents must be integers.")
