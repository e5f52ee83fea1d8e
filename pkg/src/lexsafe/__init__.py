"""Lexicographically safe Nash equilibria of tight two-person game forms.

Game forms are accessed through +-1 game oracles (``lexsafe.oracle``); the
engine (``lexsafe.engine``) builds lexsafe equilibria from containment queries
alone, so it also works when strategy sets are exponentially large.
"""

from .backends import (ExplicitGameForm, JordanMap, MbScheme, MonotonePropertyForm,
                       PositionalStructure, VetoScheme)
from .core import OutcomeSet, Player, Pm1Partition, Preference, lex_compare
from .engine import LexsafeNe, certify_ne, complement_edge, lexmax_support, lexsafe_ne
from .errors import (InternalError, InvalidInstance, InvalidMap, InvalidPreference, LexsafeError,
                     NotTight, SizeLimitExceeded)
from .estimator import LexsafeNash
from .oracle import GameOracle, Pm1Result, StrategyHandle, contains_edge, minimal_winning_strategy, solve_pm1

__version__ = "0.1.0"

__all__ = [
    "ExplicitGameForm", "GameOracle", "InternalError", "InvalidInstance", "InvalidMap",
    "InvalidPreference", "JordanMap", "LexsafeError", "LexsafeNash", "LexsafeNe", "MbScheme",
    "MonotonePropertyForm", "NotTight", "OutcomeSet", "Player", "Pm1Partition", "Pm1Result",
    "PositionalStructure", "Preference", "SizeLimitExceeded", "StrategyHandle", "VetoScheme",
    "certify_ne", "complement_edge", "contains_edge", "lex_compare", "lexmax_support",
    "lexsafe_ne", "minimal_winning_strategy", "solve_pm1",
]
