"""
The polynomials Q_m, P_m and A_m attached to a degree m, in expanded and in
cyclotomic product form, and the identities relating them.
"""
import functools
import numbers

from sympy import divisors

from NicholsPy.words.DegreeVector import DegreeVector
from NicholsPy.words.LyndonWords import lyndon_count
from .CyclotomicProductForm import CyclotomicProductForm
from .LaurentMonomial import LaurentMonomial
from .LaurentPolynomial import LaurentPolynomial
from .PmCase import PmCase


def q_integer(k, x):
    """
    (k)_x = 1 + x + ... + x^{k-1}, with (0)_x = 0.

    :param k: Nonnegative integer.
    :param x: Any ring element supporting +, -, * and ** 0.
    """
    if not isinstance(k, numbers.Integral):
        raise TypeError("k must be an integer.")

    if k < 0:
        raise ValueError("(k)_x needs k >= 0.")

    result = x - x
    term = x ** 0
    for _ in range(k):
        result = result + term
        term = term * x
    return result


def classify(m):
    """
    :param m: Degree with |m| >= 2.
    :return: PmCase naming which of the eight P_m cases applies.
    """
    return _classify(_check_degree(m))


@functools.lru_cache(maxsize=None)
def _classify(m):

    support = m.support()

    if len(support) == 1:
        i = support[0]
        return PmCase("single-letter", i=i, m_i=m[i - 1])

    if len(support) != 2:
        return PmCase("generic")

    s, t = support
    a, b = m[s - 1], m[t - 1]

    # Orientation (i, j) puts the distinguished multiplicity on i.
    for i, j, m_i, m_j in ((s, t, a, b), (t, s, b, a)):
        if m_i == 1:
            return PmCase("one-plus-k", i, j, m_i, m_j)

    for i, j, m_i, m_j in ((s, t, a, b), (t, s, b, a)):
        if m_i == 2:
            return PmCase("two-plus-k", i, j, m_i, m_j)

    for i, j, m_i, m_j in ((s, t, a, b), (t, s, b, a)):
        if (m_i, m_j) == (3, 3):
            return PmCase("(3,3)", i, j, m_i, m_j)
        if (m_i, m_j) == (3, 4):
            return PmCase("(3,4)", i, j, m_i, m_j)
        if (m_i, m_j) == (3, 6):
            return PmCase("(3,6)", i, j, m_i, m_j)
        if (m_i, m_j) == (4, 4):
            return PmCase("(4,4)", i, j, m_i, m_j)

    return PmCase("generic")


def q_monomial(m):
    """
    Q_m: p_ii carries m_i(m_i - 1)/N(m) and both p_ij and p_ji carry
    m_i m_j/N(m).
    """
    m = _check_degree(m)
    big_n = m.bigN()

    exponents = {}
    for i in range(1, m.n + 1):
        exponents[(i, i)] = m[i - 1] * (m[i - 1] - 1) // big_n
        for j in range(i + 1, m.n + 1):
            exponents[(i, j)] = m[i - 1] * m[j - 1] // big_n
            exponents[(j, i)] = m[i - 1] * m[j - 1] // big_n
    return LaurentMonomial(exponents)


def p_poly(m):
    """
    P_m expanded as an integer polynomial in the p_ij.
    """
    m = _check_degree(m)
    case = classify(m)
    i, j = case.i, case.j

    def p(a, b, e=1):
        return LaurentMonomial.variable(a, b, e)

    def poly(monomial):
        return LaurentPolynomial.from_monomial(monomial)

    if case.tag == "single-letter":
        return q_integer(case.m_i, LaurentPolynomial.variable(i, i))

    if case.tag != "generic":
        pair = p(i, j) * p(j, i)

    if case.tag == "one-plus-k":
        return 1 - poly(p(j, j, case.m_j - 1) * pair)

    if case.tag == "two-plus-k":
        k = case.m_j
        return 1 + (-1) ** (k % 2) * poly(p(j, j, k * (k - 1) // 2) *
                                          pair ** k * p(i, i))

    if case.tag == "(3,3)":
        return q_integer(3, poly(p(i, i, 2) * pair ** 3 * p(j, j, 2)))

    if case.tag == "(3,4)":
        return (1 - poly(p(i, i, 2) * pair ** 4 * p(j, j, 4))) * \
            q_integer(3, poly(p(i, i) * pair ** 2 * p(j, j, 2)))

    if case.tag == "(3,6)":
        return (1 - poly(p(i, i) * pair ** 3 * p(j, j, 5))) * \
            q_integer(3, poly(p(i, i, 2) * pair ** 6 * p(j, j, 10)))

    if case.tag == "(4,4)":
        return (1 + poly(p(i, i, 3) * pair ** 4 * p(j, j, 3))) * \
            (1 + poly(p(i, i, 6) * pair ** 8 * p(j, j, 6)))

    return 1 - poly(q_monomial(m) ** m.bigN())


def p_factor_form(m):
    """
    P_m as a product of distinct factors Phi_d(Q_m); expands to p_poly(m)
    exactly.
    """
    m = _check_degree(m)
    case = classify(m)
    base = q_monomial(m)

    if case.tag == "single-letter":
        return CyclotomicProductForm.q_integer(base, case.m_i)

    if case.tag == "one-plus-k":
        return CyclotomicProductForm(base, {1: 1}, sign=-1)

    if case.tag == "two-plus-k":
        if case.m_j % 2 == 0:
            return CyclotomicProductForm(base, {2: 1})
        return CyclotomicProductForm(base, {1: 1}, sign=-1)

    if case.tag == "(3,3)":
        return CyclotomicProductForm(base, {3: 1})

    if case.tag == "(3,4)":
        return CyclotomicProductForm(base, {1: 1, 2: 1, 3: 1}, sign=-1)

    if case.tag == "(3,6)":
        return CyclotomicProductForm(base, {1: 1, 3: 1, 6: 1}, sign=-1)

    if case.tag == "(4,4)":
        return CyclotomicProductForm(base, {2: 1, 4: 1})

    return CyclotomicProductForm.one_minus_power(base, m.bigN())


def a_form(m):
    """
    A_m as a product form: the factors (1 - Q^{N(m)/k})^{l_{(m - e_i)/k}}
    over i in the support and k | gcd(m - e_i), divided by the factors
    (1 - Q^{N(m)/k})^{l_{m/k}} over k | gcd(m).
    """
    return _a_form(_check_degree(m))


@functools.lru_cache(maxsize=None)
def _a_form(m):

    base = q_monomial(m)
    big_n = m.bigN()

    form = CyclotomicProductForm(base)
    for i in m.support():
        lower = m.minus_unit(i)
        for k in divisors(lower.gcd()):
            count = lyndon_count(lower.divide(k))
            if count:
                form = form * CyclotomicProductForm.one_minus_power(
                    base, big_n // k, count)

    for k in divisors(m.gcd()):
        count = lyndon_count(m.divide(k))
        if count:
            form = form / CyclotomicProductForm.one_minus_power(
                base, big_n // k, count)

    return form


def a_cofactor(m):
    """
    :return: The form A_m / P_m.
    """
    return a_form(m) / p_factor_form(m)


def radical_identity_check(m):
    """
    Checks that P_m is the product of the distinct irreducible factors of
    A_m: the positive support of A_m is the factor set of P_m, and the
    expanded radical equals P_m up to sign and a monomial unit.

    :param m: Degree with at least two nonzero entries.
    :return: bool
    """
    m = _check_degree(m)
    if len(m.support()) < 2:
        raise ValueError("the radical identity needs two nonzero entries.")

    a = a_form(m)
    p = p_factor_form(m)

    if not a.is_polynomial():
        return False

    if set(p.multiplicities.values()) != {1}:
        return False

    if a.support() != p.support():
        return False

    return equal_up_to_unit(a.radical().expand(), p_poly(m))


def coprime_check(m, l):
    """
    Decides whether P_m and P_l are relatively prime. Every irreducible
    factor of P_m is some Phi_d(Q_m), and Q_m is not a proper power, so a
    common factor exists exactly when Q_m = Q_l and the factor sets meet.

    :param m: Degree with at least two nonzero entries.
    :param l: Degree with |l| >= 2.
    """
    m = _check_degree(m)
    l = _check_degree(l)
    if len(m.support()) < 2:
        raise ValueError("coprime_check needs m with two nonzero entries.")

    return not _share_factor(p_factor_form(m), p_factor_form(l))


def a_coprime_check(m, l):
    """
    Same structural test for A_m and A_l, for degrees not of the form k e_i.
    """
    m = _check_degree(m)
    l = _check_degree(l)
    if len(m.support()) < 2 or len(l.support()) < 2:
        raise ValueError("a_coprime_check needs two nonzero entries in "
                         "both degrees.")

    return not _share_factor(a_form(m), a_form(l))


def equal_up_to_unit(f, g):
    """
    :return: True if f = +-u * g for a monomial u.
    """
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()

    f_monomial, f_coeff = f.leading_term()
    g_monomial, g_coeff = g.leading_term()
    if abs(f_coeff) != abs(g_coeff):
        return False

    unit = LaurentPolynomial.from_monomial(f_monomial / g_monomial,
                                           f_coeff // g_coeff)
    return f == unit * g


def _share_factor(form, other):

    if form.base != other.base:
        return False

    return bool(set(form.support()) & set(other.support()))


def _check_degree(m):

    if not isinstance(m, DegreeVector):
        m = DegreeVector(m)

    if m.total() < 2:
        raise ValueError("P_m and Q_m are defined for |m| >= 2.")

    return m
