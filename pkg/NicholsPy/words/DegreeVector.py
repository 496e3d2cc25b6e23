import itertools
import numbers

import numpy as np


class DegreeVector(object):
    """
    An element m = (m_1, ..., m_n) of N_0^n, the multidegree of a word over
    the alphabet {1, ..., n}.

    Comparison operators implement the componentwise partial order:
    m <= l if and only if m_i <= l_i for all i. Use sort_key() for the
    graded lexicographic total order used when sweeping degrees.
    """
    def __init__(self, entries):
        """
        :param entries: Nonnegative integer entries (m_1, ..., m_n).
        :type entries: list(int), tuple(int) or ndarray
        """
        if isinstance(entries, DegreeVector):
            entries = entries.entries

        self.__check_entries(entries)

        self._entries = np.array(entries, dtype=np.int64)
        self._entries.setflags(write=False)

    @classmethod
    def unit(cls, i, n):
        """
        :param i: Index of the letter, 1 <= i <= n.
        :param n: Alphabet size.
        :return: The unit vector e_i in N_0^n.
        """
        if not 1 <= i <= n:
            raise ValueError("unit vector index must lie in 1..n.")

        entries = np.zeros(n, dtype=np.int64)
        entries[i - 1] = 1
        return cls(entries)

    @classmethod
    def graded(cls, n, total):
        """
        All degree vectors of N_0^n with |m| = total, in lexicographic order.

        :param n: Alphabet size.
        :param total: The common value of |m|.
        :return: list(DegreeVector)
        """
        if n < 1:
            raise ValueError("alphabet size must be at least 1.")

        degrees = []
        for bars in itertools.combinations(range(total + n - 1), n - 1):
            previous = -1
            entries = []
            for bar in bars + (total + n - 1,):
                entries.append(bar - previous - 1)
                previous = bar
            degrees.append(cls(entries))

        degrees.sort(key=lambda m: tuple(m.entries))
        return degrees

    @classmethod
    def all_upto(cls, n, max_total, min_total=2):
        """
        All degree vectors with min_total <= |m| <= max_total, graded by |m|
        and lexicographic inside a grade. Every l < m is listed before m.
        """
        degrees = []
        for total in range(min_total, max_total + 1):
            degrees.extend(cls.graded(n, total))
        return degrees

    @property
    def entries(self):
        return self._entries

    @property
    def n(self):
        return self._entries.size

    def total(self):
        """
        :return: |m|, the length of every word of this degree.
        """
        return int(np.sum(self._entries))

    def is_zero(self):
        return not np.any(self._entries)

    def support(self):
        """
        :return: list of the (1-based) indices i with m_i > 0.
        """
        return [int(i) + 1 for i in np.flatnonzero(self._entries)]

    def gcd(self):
        """
        :return: gcd(m_1, ..., m_n); defined for m != 0.
        """
        if self.is_zero():
            raise ValueError("gcd is undefined for the zero degree.")

        return int(np.gcd.reduce(self._entries))

    def bigN(self):
        """
        N(m) = gcd{m_i(m_i - 1), m_j m_k : j < k}; defined for |m| >= 2.
        """
        if self.total() < 2:
            raise ValueError("N(m) requires |m| >= 2.")

        m = self._entries
        terms = list(m * (m - 1))
        for j, k in itertools.combinations(range(self.n), 2):
            terms.append(m[j] * m[k])

        return int(np.gcd.reduce(np.array(terms, dtype=np.int64)))

    def minus_unit(self, i):
        """
        :return: m - e_i; requires m_i > 0.
        """
        if self._entries[i - 1] <= 0:
            raise ValueError("m - e_i requires m_i > 0.")

        entries = self._entries.copy()
        entries[i - 1] -= 1
        return DegreeVector(entries)

    def divide(self, k):
        """
        :return: m/k; k must divide every entry.
        """
        if k <= 0 or np.any(self._entries % k):
            raise ValueError("%s does not divide every entry of %s." %
                             (k, self))

        return DegreeVector(self._entries // k)

    def strictly_below(self):
        """
        All l with l < m in the partial order and |l| >= 2.
        """
        ranges = [range(int(entry) + 1) for entry in self._entries]
        below = []
        for entries in itertools.product(*ranges):
            if sum(entries) >= 2 and tuple(entries) != self.as_tuple():
                below.append(DegreeVector(entries))
        return below

    def sort_key(self):
        return (self.total(),) + self.as_tuple()

    def as_tuple(self):
        return tuple(int(entry) for entry in self._entries)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return int(self._entries[i])

    def __iter__(self):
        return iter(self.as_tuple())

    def __eq__(self, other):
        if not isinstance(other, DegreeVector):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __le__(self, other):
        self.__check_comparable(other)
        return bool(np.all(self._entries <= other.entries))

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __hash__(self):
        return hash(self.as_tuple())

    def __str__(self):
        return "(" + ",".join(str(entry) for entry in self) + ")"

    def __repr__(self):
        return "DegreeVector(%s)" % list(self.as_tuple())

    def __check_comparable(self, other):

        if not isinstance(other, DegreeVector):
            raise TypeError("can only compare with another DegreeVector.")

        if other.n != self.n:
            raise ValueError("degree vectors must have the same length.")

    @staticmethod
    def __check_entries(entries):

        if not isinstance(entries, (list, tuple, np.ndarray)):
            raise TypeError("entries must be a list, tuple or ndarray.")

        if len(entries) < 1:
            raise ValueError("alphabet size must be at least 1.")

        for entry in entries:
            if not isinstance(entry, (numbers.Integral, np.integer)):
                raise TypeError("entries must be integers.")
            if entry < 0:
                raise ValueError("entries must be nonnegative.")
