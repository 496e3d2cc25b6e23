from .BraidingMatrix import BraidingMatrix, DEFAULT_SEED
from .HomogeneousComponent import HomogeneousComponent
from .MonomialOperator import MonomialOperator
from .ShuffleRepresentation import ShuffleRepresentation, Orbit
