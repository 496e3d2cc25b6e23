import numpy as np

from .FieldContext import FieldContext


class OperatorMatrix(object):
    """
    A matrix of exact field elements, stored as a numpy object array and
    optionally indexed by the basis words of a homogeneous component.
    """
    def __init__(self, array, context, basis=None):
        """
        :param array: Two dimensional array of elements of context.
        :type array: ndarray
        :param context: The field the entries live in.
        :type context: FieldContext
        :param basis: Words indexing the rows and columns, if square.
        :type basis: list(Word) or None
        """
        self.__check_parameters(array, context, basis)

        self._array = np.array(array, dtype=object)
        self._context = context
        self._basis = list(basis) if basis is not None else None

    @classmethod
    def identity(cls, context, size, basis=None):
        return cls.diagonal(context, [context.one()] * size, basis)

    @classmethod
    def zeros(cls, context, rows, cols=None, basis=None):
        if cols is None:
            cols = rows

        array = np.empty((rows, cols), dtype=object)
        array.fill(context.zero())
        return cls(array, context, basis)

    @classmethod
    def diagonal(cls, context, entries, basis=None):
        matrix = cls.zeros(context, len(entries), basis=basis)
        for i, entry in enumerate(entries):
            matrix.array[i, i] = entry
        return matrix

    @property
    def array(self):
        return self._array

    @property
    def context(self):
        return self._context

    @property
    def basis(self):
        return self._basis

    @property
    def shape(self):
        return self._array.shape

    def is_square(self):
        return self.shape[0] == self.shape[1]

    def entry(self, i, j):
        return self._array[i, j]

    def is_zero(self):
        return all(self._context.is_zero(x) for x in self._array.flat)

    def rank(self):
        """
        :return: Rank over the field, by fraction-free elimination.
        """
        rank, _, _ = self.__eliminate()
        return rank

    def kernel_dim(self):
        """
        :return: Dimension of the right kernel, columns minus rank.
        """
        return self.shape[1] - self.rank()

    def det(self):
        """
        :return: The determinant as a field element.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square %dx%d matrix." %
                             self.shape)

        rank, sign, last_pivot = self.__eliminate()
        if rank < self.shape[0]:
            return self._context.zero()

        return last_pivot * sign

    def to_dict(self):
        """
        :return: {"basis": [...], "rows": [[serialized entry, ...], ...]}
        """
        basis = [str(word) for word in self._basis] \
            if self._basis is not None else None

        rows = [[self._context.serialize(x) for x in row]
                for row in self._array]
        return {"basis": basis, "rows": rows}

    def __eliminate(self):
        """
        Bareiss elimination with the first nonzero entry of each column as
        pivot. Every entry below the pivot row is replaced by
        (pivot * a_ij - a_ic * a_rj) / previous pivot, which stays exact.

        :return: (rank, sign of the row permutation, last pivot)
        """
        context = self._context
        work = self._array.copy()
        rows, cols = work.shape

        sign = 1
        previous = context.one()
        rank = 0

        for col in range(cols):
            if rank == rows:
                break

            nonzero = [i for i in range(rank, rows)
                       if not context.is_zero(work[i, col])]
            if not nonzero:
                continue

            pivot_row = nonzero[0]
            if pivot_row != rank:
                work[[rank, pivot_row], :] = work[[pivot_row, rank], :]
                sign = -sign

            pivot = work[rank, col]
            inverse = context.inverse(previous)

            below = work[rank + 1:, col].copy()
            work[rank + 1:, col + 1:] = \
                (work[rank + 1:, col + 1:] * pivot -
                 np.outer(below, work[rank, col + 1:])) * inverse
            work[rank + 1:, col] = context.zero()

            previous = pivot
            rank += 1

        return rank, sign, previous

    def __mul__(self, other):

        if isinstance(other, OperatorMatrix):
            self.__check_compatible(other, product=True)
            basis = self._basis if other.basis is not None else None
            return OperatorMatrix(np.dot(self._array, other.array),
                                  self._context, basis)

        return OperatorMatrix(self._array * other, self._context,
                              self._basis)

    def __add__(self, other):
        self.__check_compatible(other)
        return OperatorMatrix(self._array + other.array, self._context,
                              self._basis)

    def __sub__(self, other):
        self.__check_compatible(other)
        return OperatorMatrix(self._array - other.array, self._context,
                              self._basis)

    def __neg__(self):
        return OperatorMatrix(self._array * -1, self._context, self._basis)

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented

        if self.shape != other.shape or self._context != other.context:
            return False

        return all(a == b for a, b in zip(self._array.flat, other.array.flat))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "OperatorMatrix(%dx%d over %s)" % (self.shape + (self._context,))

    def __check_compatible(self, other, product=False):

        if not isinstance(other, OperatorMatrix):
            raise TypeError("expected an OperatorMatrix.")

        if other.context != self._context:
            raise ValueError("matrices over different fields: %s and %s." %
                             (self._context, other.context))

        if product and self.shape[1] != other.shape[0]:
            raise ValueError("cannot multiply %dx%d by %dx%d." %
                             (self.shape + other.shape))

        if not product and self.shape != other.shape:
            raise ValueError("shape mismatch: %dx%d and %dx%d." %
                             (self.shape + other.shape))

    @staticmethod
    def __check_parameters(array, context, basis):

        if not isinstance(context, FieldContext):
            raise TypeError("context must be a FieldContext.")

        if not isinstance(array, np.ndarray) or array.ndim != 2:
            raise TypeError("array must be a two dimensional ndarray.")

        if basis is not None and (len(basis) != array.shape[0] or
                                  array.shape[0] != array.shape[1]):
            raise ValueError("basis length must match a square matrix.")
