"""Oracle backends: explicit matrices and the five implicit game-form families."""

from .bargaining import MbScheme
from .explicit import ExplicitGameForm, MonotonePropertyForm
from .jordan import JordanMap
from .positional import PositionalStructure
from .veto import VetoScheme

__all__ = [
    "ExplicitGameForm",
    "JordanMap",
    "MbScheme",
    "MonotonePropertyForm",
    "PositionalStructure",
    "VetoScheme",
]
