from .BraidingSpec import BraidingSpec
from .SelfTest import SelfTest
from .main import main, build_parser
