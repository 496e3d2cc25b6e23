from .HypothesisError import HypothesisError
from .FreenessReport import FreenessReport
from .KernelReport import KernelReport
from .ExponentBraiding import ExponentBraiding
from .NicholsAnalyzer import NicholsAnalyzer
