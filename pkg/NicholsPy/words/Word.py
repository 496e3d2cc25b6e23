import numbers

import numpy as np

from .DegreeVector import DegreeVector


class Word(tuple):
    """
    A finite word over the alphabet {1, ..., n}, stored as a tuple of letters.

    Tuple comparison is the lexicographic order used throughout: a proper
    prefix is smaller than the word it extends, otherwise the first differing
    letter decides.
    """
    def __new__(cls, letters=()):
        """
        :param letters: Sequence of positive integer letters, or a string of
            single-digit letters such as "1122".
        :type letters: iterable(int) or str
        """
        if isinstance(letters, str):
            letters = [int(letter) for letter in letters]

        letters = tuple(int(letter) for letter in letters)

        for letter in letters:
            if letter < 1:
                raise ValueError("letters must be positive integers.")

        return super(Word, cls).__new__(cls, letters)

    def degree(self, n=None):
        """
        :param n: Alphabet size; defaults to the largest letter.
        :return: DegreeVector counting the occurrences of each letter.
        """
        if n is None:
            n = max(self) if self else 1

        if not isinstance(n, numbers.Integral):
            raise TypeError("alphabet size must be an integer.")

        if self and max(self) > n:
            raise ValueError("word uses letters outside 1..n.")

        counts = np.zeros(n, dtype=np.int64)
        for letter in self:
            counts[letter - 1] += 1
        return DegreeVector(counts)

    def rotate(self, shift=1):
        """
        :return: The word i_{s+1} ... i_m i_1 ... i_s.
        """
        if not self:
            return self
        shift %= len(self)
        return Word(self[shift:] + self[:shift])

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __mul__(self, power):
        return Word(tuple(self) * power)

    def __str__(self):
        if any(letter > 9 for letter in self):
            return ".".join(str(letter) for letter in self)
        return "".join(str(letter) for letter in self)

    def __repr__(self):
        return "Word('%s')" % str(self)
