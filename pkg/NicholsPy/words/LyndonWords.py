"""
Lyndon words, necklaces and the counts l_m, N_m of a given multidegree.
"""
import collections
import functools

import numpy as np
from scipy.special import comb
from sympy import divisors, mobius
from sympy.utilities.iterables import multiset_permutations

from .DegreeVector import DegreeVector
from .Word import Word


LyndonInequality = collections.namedtuple(
    "LyndonInequality", ["lhs", "rhs", "equality", "expected_equality"])


def is_lyndon(word):
    """
    A nonempty word is Lyndon if it is strictly smaller than each of its
    proper suffixes.

    :param word: Word or letter sequence.
    :return: bool
    """
    word = Word(word)
    if len(word) == 0:
        raise ValueError("empty word")

    return all(word < word[i:] for i in range(1, len(word)))


def is_necklace(word):
    """
    :return: Whether the word is minimal among its rotations.
    """
    word = Word(word)
    if len(word) == 0:
        raise ValueError("empty word")

    return all(word <= word.rotate(i) for i in range(1, len(word)))


def lyndon_words(m):
    """
    :param m: Nonzero degree.
    :type m: DegreeVector
    :return: Sorted list of all Lyndon words of degree exactly m.
    """
    m = _as_degree(m)
    if m.is_zero():
        raise ValueError("Lyndon words need a nonzero degree.")

    # Only the letters in the support occur; enumerate over the compressed
    # alphabet and relabel.
    support = m.support()
    compressed = tuple(m[i - 1] for i in support)
    words = _lyndon_words_by_degree(len(support), m.total()).get(compressed, [])

    relabeled = [Word(support[letter - 1] for letter in word) for word in words]
    relabeled.sort()
    return relabeled


def lyndon_count(m):
    """
    :return: l_m, the number of Lyndon words of degree m.
    """
    m = _as_degree(m)
    if m.is_zero():
        raise ValueError("Lyndon words need a nonzero degree.")

    support = m.support()
    compressed = tuple(m[i - 1] for i in support)
    return len(_lyndon_words_by_degree(len(support), m.total())
               .get(compressed, []))


def lyndon_count_mobius(m):
    """
    l_m from Moebius inversion of the word count over divisors of gcd(m).
    Independent of the enumeration and used to cross-check it.
    """
    m = _as_degree(m)
    if m.is_zero():
        raise ValueError("Lyndon words need a nonzero degree.")

    total = 0
    for d in divisors(m.gcd()):
        total += mobius(d) * multinomial(m.divide(d))
    return int(total) // m.total()


def necklace_count(m):
    """
    N_m as the sum of l_{m/d} over the divisors d of gcd(m).
    """
    m = _as_degree(m)
    if m.is_zero():
        raise ValueError("necklaces need a nonzero degree.")

    return sum(lyndon_count(m.divide(d)) for d in divisors(m.gcd()))


def necklaces(m):
    """
    All necklaces of degree m, found by testing every word of degree m for
    rotation minimality.
    """
    m = _as_degree(m)
    if m.is_zero():
        raise ValueError("necklaces need a nonzero degree.")

    return [word for word in words_of_degree(m) if is_necklace(word)]


def lyndon_factor_power(word):
    """
    For a necklace w returns the unique pair (v, k) with v Lyndon and w = v^k.
    """
    word = Word(word)
    if not is_necklace(word):
        raise ValueError("%s is not a necklace." % (word,))

    length = len(word)
    for period in divisors(length):
        v = Word(word[:period])
        if v * (length // period) == word:
            return v, length // period

    raise ValueError("%s is not a necklace." % (word,))


def words_of_degree(m):
    """
    :return: Lexicographically sorted list of all words of degree m.
    """
    m = _as_degree(m)
    letters = []
    for i, count in enumerate(m):
        letters.extend([i + 1] * count)

    return sorted(Word(word) for word in multiset_permutations(letters))


def multinomial(m):
    """
    :return: |m|! / (m_1! ... m_n!), the number of words of degree m.
    """
    m = _as_degree(m)
    result = 1
    remaining = m.total()
    for count in m:
        result *= int(comb(remaining, count, exact=True))
        remaining -= count
    return result


def lyndon_inequality(m):
    """
    Compares sum_{k | gcd(m)} l_{m/k} with sum_{i: m_i > 0} l_{m - e_i}.

    :param m: Degree with at least two nonzero entries.
    :return: LyndonInequality(lhs, rhs, equality, expected_equality); the
        expected equality is read off the P_m case classification.
    """
    from NicholsPy.poly.PmFamily import classify

    m = _as_degree(m)
    if len(m.support()) < 2:
        raise ValueError("the Lyndon inequality needs two nonzero entries.")

    lhs = sum(lyndon_count(m.divide(k)) for k in divisors(m.gcd()))
    rhs = sum(lyndon_count(m.minus_unit(i)) for i in m.support())

    case = classify(m)
    is_two_letter_case = case.is_two_letter()
    is_e_s_plus_e_t = m.total() == 2 and len(m.support()) == 2

    return LyndonInequality(lhs, rhs, lhs == rhs,
                            is_two_letter_case and not is_e_s_plus_e_t)


@functools.lru_cache(maxsize=None)
def _lyndon_words_by_degree(n, length):
    """
    Lyndon words of the given length over n letters, grouped by degree.
    Generated by Duval's successor algorithm and filtered by length.
    """
    by_degree = collections.defaultdict(list)
    word = [0]
    while word:
        if len(word) == length:
            counts = np.bincount(word, minlength=n)
            by_degree[tuple(int(c) for c in counts)].append(
                Word(letter + 1 for letter in word))

        period = len(word)
        while len(word) < length:
            word.append(word[len(word) - period])
        while word and word[-1] == n - 1:
            word.pop()
        if word:
            word[-1] += 1

    return dict(by_degree)


def _as_degree(m):

    if isinstance(m, DegreeVector):
        return m

    return DegreeVector(m)


def divisor_lyndon_sum(m, modulus):
    """
    sum of l_{m/k} over the k dividing both gcd(m) and modulus.
    """
    m = _as_degree(m)
    if m.is_zero():
        raise ValueError("Lyndon words need a nonzero degree.")

    return sum(lyndon_count(m.divide(k)) for k in divisors(m.gcd())
               if modulus % k == 0)
