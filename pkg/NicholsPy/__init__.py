from .words import DegreeVector, Word
from .poly import LaurentMonomial, LaurentPolynomial, CyclotomicProductForm
from .field import CyclotomicField, RationalFunctionField, OperatorMatrix
from .shuffle import BraidingMatrix, ShuffleRepresentation
from .analyzer import NicholsAnalyzer, ExponentBraiding, HypothesisError

__version__ = "0.1.0"
