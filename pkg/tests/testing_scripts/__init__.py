from .braidings import spec_path, load_braiding, final_example_braiding, \
    rational_braiding, random_rational_braidings, random_cyclotomic_braidings
from .random_values import random_element, random_nonzero_element, \
    random_matrix, random_polynomial
