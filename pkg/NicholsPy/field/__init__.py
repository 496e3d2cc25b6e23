from .FieldContext import FieldContext
from .CyclotomicField import CyclotomicField
from .RationalFunctionField import RationalFunctionField
from .OperatorMatrix import OperatorMatrix
