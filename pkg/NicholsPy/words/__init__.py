from .DegreeVector import DegreeVector
from .Word import Word
from .LyndonWords import is_lyndon, is_necklace, lyndon_words, \
    lyndon_count, lyndon_count_mobius, necklace_count, necklaces, \
    lyndon_factor_power, lyndon_inequality, words_of_degree, multinomial, \
    divisor_lyndon_sum, LyndonInequality
