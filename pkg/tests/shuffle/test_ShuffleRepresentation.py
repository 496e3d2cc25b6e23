import pytest
import os
import sys

import numpy as np

# Needed when running mpiexec. Be sure to run from tests directory.
if 'PYTHONPATH' not in os.environ:

    base_path = os.path.abspath('..')

    sys.path.insert(0, base_path)

from NicholsPy.field import OperatorMatrix
from NicholsPy.shuffle import ShuffleRepresentation
from NicholsPy.words import DegreeVector, Word, multinomial
from tests.testing_scripts.braidings import final_example_braiding, \
    rational_braiding, random_cyclotomic_braidings, random_rational_braidings


@pytest.fixture
def generic():
    """
    A braiding over Q with no relation among its entries in low degree.
    """
    return ShuffleRepresentation(rational_braiding([[2, 3], [5, 7]]))


@pytest.fixture
def final_example():
    return ShuffleRepresentation(final_example_braiding())


def test_sigma_matrix(generic):

    braiding = generic.braiding
    matrix = generic.sigma_matrix(1, (1, 1))

    # Columns are sources: 12 -> q_12 21 and 21 -> q_21 12.
    assert matrix.entry(1, 0) == braiding.entry(1, 2)
    assert matrix.entry(0, 1) == braiding.entry(2, 1)
    assert generic.context.is_zero(matrix.entry(0, 0))


def test_sigma_out_of_range_raises_error(generic):

    with pytest.raises(ValueError):
        generic.sigma(2, (1, 1))

    with pytest.raises(ValueError):
        generic.sigma(0, (1, 1))


def test_shuffle_det_on_pair(generic):

    context = generic.context
    det = generic.shuffle_det(1, (1, 1))
    assert det == context.one() - context.convert(15)


def test_shuffle_det_vanishes_when_pair_is_one():

    representation = ShuffleRepresentation(
        rational_braiding([[2, 3], ["1/3", 5]]))
    assert representation.context.is_zero(representation.shuffle_det(1,
                                                                      (1, 1)))
    assert representation.s1_matrix(1, (1, 1)).kernel_dim() == 1


def test_degree_size_mismatch_raises_error(generic):

    with pytest.raises(ValueError):
        generic.component((1, 1, 1))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("seed", range(20))
def test_braid_identity(n, seed):

    braiding = random_rational_braidings(n, 1, seed=seed)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.all_upto(n, 6):
        for k in range(1, m.total()):
            assert representation.braid_identity_check(k, m)


@pytest.mark.parametrize("m", [(1, 1), (2, 1), (2, 2), (1, 3), (1, 1, 1),
                               (2, 1, 1)])
def test_braid_identity_as_dense_matrices(m):

    braiding = random_rational_braidings(len(m), 1, seed=11)[0]
    representation = ShuffleRepresentation(braiding)
    component = representation.component(m)
    identity = OperatorMatrix.identity(representation.context,
                                       component.dimension, component.basis)

    for k in range(1, component.length):
        cycle = representation.shuffle_terms(k, m)[-1]
        cycle2 = cycle.compose(representation.sigma(1, m))

        left = (identity - cycle.to_matrix()) * representation.s1_matrix(k, m)
        right = representation.s1_matrix(k - 1, m) * \
            (identity - cycle2.to_matrix())
        assert left == right
        assert representation.braid_identity_check(k, m)


def test_braid_identity_bad_k_raises_error(generic):

    with pytest.raises(ValueError):
        generic.braid_identity_check(3, (2, 1))


@pytest.mark.parametrize("seed", range(3))
def test_cyclic_determinants_match_elimination(seed):

    braiding = random_rational_braidings(2, 1, seed=seed)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.all_upto(2, 5):
        assert representation.cycle_det(m) == \
            representation.cycle_matrix(m).det()
        assert representation.cycle2_det(m) == \
            representation.cycle2_matrix(m).det()


def test_cyclic_determinants_three_letters():

    braiding = random_rational_braidings(3, 1, seed=9)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.all_upto(3, 5):
        assert representation.cycle_det(m) == \
            representation.cycle_matrix(m).det()
        assert representation.cycle2_det(m) == \
            representation.cycle2_matrix(m).det()


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_coranks_match_elimination(N):

    for braiding in random_cyclotomic_braidings(2, N, 2, seed=N):
        representation = ShuffleRepresentation(braiding)
        for m in DegreeVector.all_upto(2, 4):
            assert representation.cycle_corank(m) == \
                representation.cycle_matrix(m).kernel_dim()
            assert representation.cycle2_corank(m) == \
                representation.cycle2_matrix(m).kernel_dim()


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_coranks_match_elimination_up_to_six(N):

    braiding = random_cyclotomic_braidings(2, N, 1, seed=100 + N)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.graded(2, 5) + DegreeVector.graded(2, 6):
        assert representation.cycle_corank(m) == \
            representation.cycle_matrix(m).kernel_dim()
        assert representation.cycle2_corank(m) == \
            representation.cycle2_matrix(m).kernel_dim()


@pytest.mark.parametrize("N", [3, 4])
def test_coranks_three_letters(N):

    braiding = random_cyclotomic_braidings(3, N, 1, seed=N)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.all_upto(3, 5):
        assert representation.cycle_corank(m) == \
            representation.cycle_matrix(m).kernel_dim()
        assert representation.cycle2_corank(m) == \
            representation.cycle2_matrix(m).kernel_dim()


def test_coranks_at_first_zero(final_example):

    m = DegreeVector((3, 4))

    assert final_example.d_prime(m) == 6
    assert final_example.cycle_corank(m) == 5
    assert final_example.cycle2_corank(m) == 7
    assert final_example.cycle_matrix(m).kernel_dim() == 5


def test_coranks_without_roots_of_unity(generic):

    assert generic.d_prime((2, 1)) is None
    assert generic.cycle_corank((2, 1)) == 0
    assert generic.cycle2_corank((2, 1)) == 0


def test_q_value(final_example):

    context = final_example.context
    assert final_example.q_value((3, 4)) == context.one()
    assert final_example.q_value((1, 1)) == context.generator()


@pytest.mark.parametrize("m", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_determinant_recursion(generic, m):

    assert generic.detshuffle_recursion_check(m)


def test_determinant_recursion_needs_two_letters(generic):

    with pytest.raises(ValueError):
        generic.detshuffle_recursion_check((3, 0))


@pytest.mark.parametrize("m", [(1, 1), (2, 1), (2, 2), (4, 0)])
def test_determinant_product(generic, m):

    assert generic.detshuffle_product_check(m)


def test_determinant_recursion_at_roots_of_unity():

    for braiding in random_cyclotomic_braidings(2, 3, 2, seed=1):
        representation = ShuffleRepresentation(braiding)
        for m in [(1, 1), (2, 1), (1, 2), (2, 2)]:
            assert representation.detshuffle_recursion_check(m)


@pytest.mark.parametrize("m", [(3, 0), (0, 4), (1, 0)])
def test_single_letter(generic, m):

    assert generic.single_letter_check(m)


def test_single_letter_value(generic):

    context = generic.context
    matrix = generic.s1_matrix(2, (3, 0))
    assert matrix.entry(0, 0) == context.convert(1 + 2 + 4)


def test_single_letter_needs_one_letter(generic):

    with pytest.raises(ValueError):
        generic.single_letter_check((1, 1))


def test_symmetrizer_on_pair(generic):

    symmetrizer = generic.symmetrizer_matrix((1, 1))
    assert symmetrizer == generic.s1_matrix(1, (1, 1))


def test_symmetrizer_factorization(generic):

    m = (2, 1)
    expected = generic.s1_matrix(2, m) * generic.s1_matrix(1, m, shift=1)
    assert generic.symmetrizer_matrix(m) == expected


def test_symmetrizer_is_injective_in_generic_degree(generic):

    assert generic.symmetrizer_matrix((2, 1)).kernel_dim() == 0


def test_symmetrizer_kernel_when_q11_is_minus_one():

    representation = ShuffleRepresentation(
        rational_braiding([[-1, 2], [3, 5]]))
    # x_1^2 is a relation.
    assert representation.symmetrizer_matrix((2, 0)).kernel_dim() == 1
    assert representation.symmetrizer_matrix((3, 0)).kernel_dim() == 1


def test_rotation_orbits():

    orbits = ShuffleRepresentation.orbit_decomposition((2, 2))

    assert len(orbits) == 2
    assert orbits[0].representative == (Word((1, 1, 2, 2)), 1)
    assert [str(w) for w in orbits[0].words] == \
        ["1122", "1221", "2112", "2211"]
    assert orbits[1].representative == (Word((1, 2)), 2)
    assert [str(w) for w in orbits[1].words] == ["1212", "2121"]


def test_fix_first_rotation_orbits():

    orbits = ShuffleRepresentation.orbit_decomposition(
        (1, 2), action="fix-first-rotate")

    assert len(orbits) == 2
    assert orbits[0].representative == (1, Word((2,)), 2)
    assert [str(w) for w in orbits[0].words] == ["122"]
    assert orbits[1].representative == (2, Word((1, 2)), 1)
    assert [str(w) for w in orbits[1].words] == ["212", "221"]


@pytest.mark.parametrize("action", ["rotate", "fix-first-rotate"])
@pytest.mark.parametrize("m", [(2, 3), (1, 1, 2), (4, 2)])
def test_orbits_partition_the_basis(action, m):

    orbits = ShuffleRepresentation.orbit_decomposition(m, action)
    assert sum(len(orbit.words) for orbit in orbits) == multinomial(m)


def test_orbit_parameters_raise_error():

    with pytest.raises(ValueError):
        ShuffleRepresentation.orbit_decomposition((2, 2), "reflect")

    with pytest.raises(ValueError):
        ShuffleRepresentation.orbit_decomposition((0, 0))

    with pytest.raises(ValueError):
        ShuffleRepresentation.orbit_decomposition((1, 0), "fix-first-rotate")


def test_bad_init_parameters_raise_error():

    with pytest.raises(TypeError):
        ShuffleRepresentation([[1, 2], [3, 4]])

    with pytest.raises(TypeError):
        ShuffleRepresentation(final_example_braiding(), verbose=1)


def test_cyclic_determinants_up_to_seven():

    braiding = random_rational_braidings(2, 1, seed=42)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.graded(2, 6) + DegreeVector.graded(2, 7):
        assert representation.cycle_det(m) == \
            representation.cycle_matrix(m).det()
        assert representation.cycle2_det(m) == \
            representation.cycle2_matrix(m).det()


def test_determinant_recursion_up_to_six():

    braiding = random_rational_braidings(2, 1, seed=17)[0]
    representation = ShuffleRepresentation(braiding)
    for m in DegreeVector.all_upto(2, 6):
        if len(m.support()) == 2:
            assert representation.detshuffle_recursion_check(m)


def same_operator(a, b):

    return np.array_equal(a.targets, b.targets) and \
        all(x == y for x, y in zip(a.scales, b.scales))


def random_braiding(kind, n, seed):

    if kind == "rational":
        return random_rational_braidings(n, 1, seed=seed)[0]
    return random_cyclotomic_braidings(n, 6, 1, seed=seed)[0]


@pytest.mark.parametrize("kind", ["rational", "cyclotomic"])
@pytest.mark.parametrize("n, max_total", [(3, 6), (4, 5)])
def test_braid_relations(kind, n, max_total):

    representation = ShuffleRepresentation(random_braiding(kind, n, seed=n))

    for total in range(3, max_total + 1):
        for m in DegreeVector.graded(n, total):
            for i in range(1, total - 1):
                assert same_operator(
                    representation.braid_operator((i, i + 1, i), m),
                    representation.braid_operator((i + 1, i, i + 1), m))

            for i in range(1, total):
                for j in range(i + 2, total):
                    assert same_operator(
                        representation.braid_operator((i, j), m),
                        representation.braid_operator((j, i), m))


@pytest.mark.parametrize("kind", ["rational", "cyclotomic"])
def test_braid_matrix_is_multiplicative(kind):

    representation = ShuffleRepresentation(random_braiding(kind, 2, seed=4))
    random_state = np.random.RandomState(4)

    for m in DegreeVector.all_upto(2, 7):
        length = m.total()
        u = tuple(int(i) for i in random_state.randint(1, length, size=3))
        v = tuple(int(i) for i in random_state.randint(1, length, size=2))

        assert representation.braid_matrix(u + v, m) == \
            representation.braid_matrix(u, m) * \
            representation.braid_matrix(v, m)


def test_braid_matrix_of_generators(generic):

    m = (2, 1)
    dimension = generic.component(m).dimension

    assert generic.braid_matrix((), m) == \
        OperatorMatrix.identity(generic.context, dimension)
    assert generic.braid_matrix((2,), m) == generic.sigma_matrix(2, m)
    assert generic.braid_matrix((1, 2), m) == \
        generic.sigma_matrix(1, m) * generic.sigma_matrix(2, m)


@pytest.mark.parametrize("m", [(2, 2), (3, 2), (1, 1, 2), (2, 2, 1)])
def test_cyclic_operators_preserve_orbits(m):

    braiding = random_rational_braidings(len(m), 1, seed=5)[0]
    representation = ShuffleRepresentation(braiding)
    component = representation.component(m)

    for action, operator, matrix in [
            ("rotate", representation.cycle_operator(m),
             representation.cycle_matrix(m)),
            ("fix-first-rotate", representation.cycle2_operator(m),
             representation.cycle2_matrix(m))]:

        block = {}
        orbits = ShuffleRepresentation.orbit_decomposition(m, action)
        for label, orbit in enumerate(orbits):
            for word in orbit.words:
                block[component.index(word)] = label

        for source, target in enumerate(operator.targets):
            assert block[int(target)] == block[source]

        for row in range(component.dimension):
            for col in range(component.dimension):
                if block[row] != block[col]:
                    assert representation.context.is_zero(
                        matrix.entry(row, col))
