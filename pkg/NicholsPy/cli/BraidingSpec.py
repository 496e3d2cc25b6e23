import json
import numbers

from NicholsPy.analyzer.ExponentBraiding import ExponentBraiding
from NicholsPy.field.CyclotomicField import CyclotomicField
from NicholsPy.shuffle.BraidingMatrix import BraidingMatrix


class BraidingSpec(object):
    """
    A braiding given as a JSON document with "n" and exactly one mode key:

        {"n": 2, "cyclotomic": {"N": 5, "exponents": [[1, 1], [0, 1]]}}
        {"n": 2, "transcendental": {"exponents": [[2, -1], [0, 2]]}}
        {"n": 2, "explicit": {"N": 5, "entries": [[[0, 1], ...], ...]}}

    Explicit entries are coefficient vectors in ascending powers of
    zeta_N; N defaults to 1, the rationals.
    """
    MODES = ("cyclotomic", "transcendental", "explicit")

    def __init__(self, n, mode, N=None, exponents=None, entries=None):
        """
        :param n: Size of the braiding.
        :type n: int
        :param mode: One of MODES.
        :type mode: str
        :param N: Order of the root of unity (cyclotomic, explicit).
        :type N: int or None
        :param exponents: Integer matrix a_ij (cyclotomic, transcendental).
        :param entries: Matrix of coefficient vectors (explicit).
        """
        self.__check_init_parameters(n, mode, N, exponents, entries)

        self.n = n
        self.mode = mode
        self.N = N
        self.exponents = exponents
        self.entries = entries

    @classmethod
    def from_string(cls, text):
        """
        :raises ValueError: With line and column for malformed JSON.
        """
        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise ValueError("line %d column %d: %s" %
                             (error.lineno, error.colno, error.msg))

        return cls.from_dict(document)

    @classmethod
    def from_file(cls, path):

        with open(path, "r") as spec_file:
            return cls.from_string(spec_file.read())

    @classmethod
    def from_dict(cls, document):

        if not isinstance(document, dict):
            raise ValueError("a braiding spec must be a JSON object.")

        modes = [mode for mode in cls.MODES if mode in document]
        if len(modes) != 1:
            raise ValueError("a braiding spec needs exactly one of %s." %
                             ", ".join(cls.MODES))

        mode = modes[0]
        body = document[mode]
        if not isinstance(body, dict):
            raise ValueError("'%s' must be a JSON object." % mode)

        N = body.get("N")
        if mode == "explicit" and N is None:
            N = 1

        return cls(document.get("n"), mode, N, body.get("exponents"),
                   body.get("entries"))

    def braiding(self):
        """
        :return: BraidingMatrix
        """
        if self.mode == "cyclotomic":
            return BraidingMatrix.cyclotomic(self.exponents, self.N)

        if self.mode == "transcendental":
            return BraidingMatrix.transcendental(self.exponents)

        context = CyclotomicField(self.N)
        values = [[context.element(vector) for vector in row]
                  for row in self.entries]
        return BraidingMatrix(values, context)

    def exponent_braiding(self):
        """
        :return: ExponentBraiding; explicit specs have no exponents.
        """
        if self.mode == "explicit":
            raise ValueError("explicit braidings have no exponent matrix.")

        return ExponentBraiding(self.exponents, self.N)

    def to_dict(self):
        body = {}
        if self.N is not None:
            body["N"] = self.N
        if self.exponents is not None:
            body["exponents"] = self.exponents
        if self.entries is not None:
            body["entries"] = self.entries
        return {"n": self.n, self.mode: body}

    @staticmethod
    def __check_init_parameters(n, mode, N, exponents, entries):

        if not isinstance(n, numbers.Integral) or isinstance(n, bool) \
                or n < 1:
            raise ValueError("n must be a positive integer.")

        if mode not in BraidingSpec.MODES:
            raise ValueError("unknown mode '%s'." % mode)

        if mode in ("cyclotomic", "explicit"):
            if not isinstance(N, numbers.Integral) or isinstance(N, bool) \
                    or N < 1:
                raise ValueError("N must be a positive integer.")

        matrix = entries if mode == "explicit" else exponents
        name = "entries" if mode == "explicit" else "exponents"
        if not isinstance(matrix, list) or len(matrix) != n or \
                any(not isinstance(row, list) or len(row) != n
                    for row in matrix):
            raise ValueError("%s must be an %d x %d matrix." % (name, n, n))

        if mode != "explicit" and \
                any(not isinstance(a, numbers.Integral) or isinstance(a, bool)
                    for row in matrix for a in row):
            raise ValueError("exponents must be integers.")

        if mode == "explicit" and \
                any(not isinstance(vector, list) for row in matrix
                    for vector in row):
            raise ValueError("explicit entries must be coefficient vectors.")
