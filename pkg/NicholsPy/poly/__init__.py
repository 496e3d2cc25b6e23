from .LaurentMonomial import LaurentMonomial
from .LaurentPolynomial import LaurentPolynomial
from .CyclotomicProductForm import CyclotomicProductForm, cyclotomic, \
    cyclotomic_coefficients
from .PmCase import PmCase
from .PmFamily import classify, q_monomial, p_poly, p_factor_form, a_form, \
    a_cofactor, radical_identity_check, coprime_check, a_coprime_check, \
    equal_up_to_unit, q_integer
