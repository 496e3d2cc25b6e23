import numpy as np

from NicholsPy.field.OperatorMatrix import OperatorMatrix


class MonomialOperator(object):
    """
    A linear map on a homogeneous component sending basis word a to
    scales[a] times basis word targets[a]. The image of every braid-monoid
    word under the representation has this shape.
    """
    def __init__(self, component, context, targets, scales):
        """
        :param component: The component acted on.
        :type component: HomogeneousComponent
        :param context: Field of the scales.
        :type context: FieldContext
        :param targets: Permutation of range(dimension).
        :type targets: ndarray(int)
        :param scales: Nonzero field elements, one per basis word.
        :type scales: ndarray(object)
        """
        self._component = component
        self._context = context
        self._targets = np.asarray(targets, dtype=np.int64)
        self._scales = np.asarray(scales, dtype=object)

        if self._targets.shape != (component.dimension,) or \
                self._scales.shape != (component.dimension,):
            raise ValueError("targets and scales need one entry per basis "
                             "word.")

    @classmethod
    def identity(cls, component, context):
        scales = np.empty(component.dimension, dtype=object)
        scales.fill(context.one())
        return cls(component, context, np.arange(component.dimension),
                   scales)

    @classmethod
    def sigma(cls, component, braiding, i):
        """
        The generator sigma_i: swaps the letters at positions i, i+1 of each
        word w and multiplies by q_{w_i w_{i+1}}.
        """
        letters = component.letters
        left = letters[:, i - 1]
        right = letters[:, i]

        swapped = letters.copy()
        swapped[:, i - 1] = right
        swapped[:, i] = left

        scales = braiding.entries[left - 1, right - 1]
        return cls(component, braiding.context, component.indices(swapped),
                   scales)

    @property
    def component(self):
        return self._component

    @property
    def targets(self):
        return self._targets

    @property
    def scales(self):
        return self._scales

    def compose(self, other):
        """
        :return: self o other, applying other first.
        """
        targets = self._targets[other.targets]
        scales = other.scales * self._scales[other.targets]
        return MonomialOperator(self._component, self._context, targets,
                                scales)

    def apply_left(self, array):
        """
        :param array: Square object array A.
        :return: The array of self * A.
        """
        result = np.empty_like(array)
        result[self._targets] = array * self._scales[:, np.newaxis]
        return result

    def scatter_into(self, array):
        """
        Adds the matrix of self to array in place.
        """
        columns = np.arange(self._targets.size)
        array[self._targets, columns] = \
            array[self._targets, columns] + self._scales

    def to_matrix(self):
        matrix = OperatorMatrix.zeros(self._context, self._targets.size,
                                      basis=self._component.basis)
        self.scatter_into(matrix.array)
        return matrix
