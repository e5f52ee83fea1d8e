"""Input coercion helpers in the spirit of ``sklearn.utils.validation``."""

from __future__ import annotations

from typing import Iterable, Union

from .core import OutcomeSet, Player, Preference, validate_preference
from .errors import InvalidInstance, InvalidPreference
from .oracle import GameOracle


def check_oracle(oracle) -> GameOracle:
    if not isinstance(oracle, GameOracle):
        raise TypeError(f"expected a GameOracle, got {type(oracle).__name__}")
    return oracle


def check_player(player) -> Player:
    try:
        return Player(player)
    except ValueError:
        raise InvalidInstance(f"unknown player {player!r}; expected 'alice' or 'bob'") from None


def check_preference(pref: Union[Preference, Iterable], oracle: GameOracle) -> Preference:
    """Accept a :class:`Preference`, or a worst-to-best list of labels or indices."""
    p = oracle.n_outcomes
    if isinstance(pref, Preference):
        if pref.size != p:
            raise InvalidPreference(f"preference over {pref.size} outcomes, oracle has {p}")
        return pref
    raw = list(pref)
    if raw and all(isinstance(item, str) for item in raw):
        return validate_preference(raw, p, oracle.labels)
    return validate_preference(raw, p)


def check_outcome_set(s: Union[OutcomeSet, Iterable], oracle: GameOracle) -> OutcomeSet:
    """Accept an :class:`OutcomeSet` or an iterable of labels or indices."""
    p = oracle.n_outcomes
    if isinstance(s, OutcomeSet):
        if s.size != p:
            raise InvalidInstance(f"outcome set over {s.size} outcomes, oracle has {p}")
        return s
    index = {lab: i for i, lab in enumerate(oracle.labels)}
    members = []
    for item in s:
        if isinstance(item, str):
            if item not in index:
                raise InvalidInstance(f"unknown outcome label {item!r}")
            members.append(index[item])
        else:
            members.append(int(item))
    return OutcomeSet.of(p, members)
