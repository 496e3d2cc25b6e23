import numpy as np

from NicholsPy.words.DegreeVector import DegreeVector
from NicholsPy.words.LyndonWords import multinomial, words_of_degree
from NicholsPy.words.Word import Word


class HomogeneousComponent(object):
    """
    The component V_m of the tensor algebra spanned by the words of degree m,
    with the lexicographically sorted word list X_m as basis.
    """
    def __init__(self, m):
        """
        :param m: Nonzero degree.
        :type m: DegreeVector
        """
        if not isinstance(m, DegreeVector):
            m = DegreeVector(m)

        if m.is_zero():
            raise ValueError("homogeneous components need a nonzero degree.")

        self._degree = m
        self._basis = words_of_degree(m)
        self._index = {word: k for k, word in enumerate(self._basis)}

        # Row k holds the letters of basis word k.
        self._letters = np.array(self._basis, dtype=np.int64)

        if len(self._basis) != multinomial(m):
            raise RuntimeError("basis of V_%s has %d words, expected %d." %
                               (m, len(self._basis), multinomial(m)))

    @property
    def degree(self):
        return self._degree

    @property
    def basis(self):
        return list(self._basis)

    @property
    def dimension(self):
        return len(self._basis)

    @property
    def length(self):
        """
        :return: |m|, the common length of the basis words.
        """
        return self._degree.total()

    @property
    def letters(self):
        return self._letters

    def index(self, word):
        """
        :return: Position of word in the basis.
        """
        word = Word(word)
        if word not in self._index:
            raise ValueError("%s is not a word of degree %s." %
                             (word, self._degree))
        return self._index[word]

    def indices(self, letters):
        """
        :param letters: Array with one word per row.
        :return: ndarray of basis positions.
        """
        return np.array([self._index[tuple(int(c) for c in row)]
                         for row in letters], dtype=np.int64)

    def word(self, k):
        return self._basis[k]

    def __len__(self):
        return self.dimension

    def __repr__(self):
        return "HomogeneousComponent(%s, dim=%d)" % (self._degree,
                                                     self.dimension)
