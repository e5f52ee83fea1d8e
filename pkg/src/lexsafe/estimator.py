"""Estimator-style front end to the lexsafe engine."""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .core import Player
from .engine import LexsafeNe, certify_ne, lexsafe_ne
from .errors import InvalidInstance
from .validation import check_oracle, check_preference

PLAYERS = {"alice": (Player.ALICE,), "bob": (Player.BOB,), "both": (Player.ALICE, Player.BOB)}


class LexsafeNash(BaseEstimator):
    """Lexsafe Nash equilibria of a tight game form.

    ``fit`` binds the game form (any oracle backend); ``solve`` and
    ``predict`` then take preference profiles. A and B preferences are
    worst-to-best sequences of outcome labels or indices, or
    :class:`~lexsafe.core.Preference` objects.

    Parameters
    ----------
    player : {"alice", "bob", "both"}
        Whose lexsafe equilibrium box to sample.
    dichotomy : bool
        Binary search inside each step of the lexmax search. Same support,
        fewer queries on large outcome sets.
    """

    def __init__(self, player: str = "both", dichotomy: bool = False):
        self.player = player
        self.dichotomy = dichotomy

    def fit(self, oracle, y=None) -> "LexsafeNash":
        if self.player not in PLAYERS:
            raise InvalidInstance(f"player must be one of {sorted(PLAYERS)}, got {self.player!r}")
        self.oracle_ = check_oracle(oracle)
        self.labels_ = oracle.labels
        self.n_outcomes_ = oracle.n_outcomes
        return self

    def solve(self, pref_a, pref_b) -> Dict[Player, LexsafeNe]:
        check_is_fitted(self, "oracle_")
        pa = check_preference(pref_a, self.oracle_)
        pb = check_preference(pref_b, self.oracle_)
        out = {}
        for who in PLAYERS[self.player]:
            own, other = (pa, pb) if who is Player.ALICE else (pb, pa)
            ne = lexsafe_ne(self.oracle_, own, other, who, dichotomy=self.dichotomy)
            if not certify_ne(ne, pa, pb):
                raise AssertionError(f"uncertified equilibrium {ne}")
            out[who] = ne
        return out

    def predict(self, profiles: Iterable[Tuple]) -> np.ndarray:
        """Equilibrium outcome indices, one row per ``(pref_a, pref_b)`` profile.

        Columns follow ``player``: Alice then Bob for ``"both"``.
        """
        rows = [[ne.ne_outcome for ne in self.solve(pa, pb).values()] for pa, pb in profiles]
        return np.asarray(rows, dtype=int).reshape(len(rows), len(PLAYERS[self.player]))
