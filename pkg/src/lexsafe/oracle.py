"""The +-1 game solver contract shared by all backends.

Every backend subclasses :class:`GameOracle` and implements ``_solve``, which
returns the winner of the +-1 game on a partition together with a
backend-native winning strategy. Small instances can also be expanded into an
explicit matrix through :meth:`GameOracle.expand`, which the test suite uses to
cross-check every oracle against brute force.
"""

from __future__ import annotations

import abc
import itertools
from dataclasses import dataclass
from typing import Any, Hashable, Iterator, List, Optional, Sequence, Tuple

from .core import OutcomeSet, Player, Pm1Partition
from .errors import InvalidInstance, SizeLimitExceeded


@dataclass(frozen=True)
class StrategyHandle:
    """A strategy of ``player`` in the native encoding of ``backend``."""

    backend: str
    player: Player
    payload: Hashable


@dataclass(frozen=True)
class Pm1Result:
    winner: Player
    strategy: StrategyHandle
    queries_used: int = 1


@dataclass(frozen=True)
class Expansion:
    """Explicit normal form of an oracle plus the strategy behind each row and column."""

    form: Any  # ExplicitGameForm; typed loosely to avoid an import cycle
    rows: List[Hashable]
    cols: List[Hashable]

    def row_index(self, payload) -> int:
        return self._index(self.rows, payload)

    def col_index(self, payload) -> int:
        return self._index(self.cols, payload)

    @staticmethod
    def _index(seq, payload):
        try:
            return seq.index(payload)
        except ValueError:
            raise InvalidInstance(f"strategy {payload!r} is not part of the expansion") from None


class GameOracle(abc.ABC):
    """Abstract +-1 game oracle over an explicit outcome list."""

    backend: str = "abstract"
    default_limit: int = 4096

    def __init__(self, labels: Sequence[str]):
        labels = tuple(str(lab) for lab in labels)
        if not labels:
            raise InvalidInstance("an oracle needs at least one outcome")
        if len(set(labels)) != len(labels):
            raise InvalidInstance(f"duplicate outcome labels in {labels}")
        self.labels = labels

    @property
    def n_outcomes(self) -> int:
        return len(self.labels)

    @abc.abstractmethod
    def _solve(self, omega_a: OutcomeSet) -> Tuple[Player, Hashable]:
        """Return ``(winner, payload)`` for the +-1 game won by Alice on ``omega_a``."""

    @abc.abstractmethod
    def strategies(self, player: Player) -> Iterator[Hashable]:
        """Enumerate all strategies of ``player`` in canonical order (may be exponential)."""

    @abc.abstractmethod
    def outcome(self, x, y) -> int:
        """Outcome index of the situation ``(x, y)``."""

    def count_strategies(self) -> Tuple[int, int]:
        return (sum(1 for _ in self.strategies(Player.ALICE)),
                sum(1 for _ in self.strategies(Player.BOB)))

    def payload_to_json(self, player: Player, payload):
        return payload

    def payload_from_json(self, player: Player, data) -> Hashable:
        return data

    def transpose(self) -> "GameOracle":
        return TransposedOracle(self)

    def expand(self, limit: Optional[int] = None) -> Expansion:
        """Enumerate both strategy sets and tabulate every situation."""
        from .backends.explicit import ExplicitGameForm

        limit = self.default_limit if limit is None else limit
        rows = list(itertools.islice(self.strategies(Player.ALICE), limit + 1))
        cols = list(itertools.islice(self.strategies(Player.BOB), limit + 1))
        if len(rows) > limit or len(cols) > limit:
            raise SizeLimitExceeded(
                f"{self.backend} expansion exceeds {limit} strategies per player")
        cells = [[self.outcome(x, y) for y in cols] for x in rows]
        form = ExplicitGameForm(cells, self.n_outcomes, labels=self.labels, check_surjective=False)
        return Expansion(form, rows, cols)

    def handle(self, player: Player, payload) -> StrategyHandle:
        return StrategyHandle(self.backend, player, payload)


class TransposedOracle(GameOracle):
    """View of ``base`` with the roles of Alice and Bob exchanged."""

    def __init__(self, base: GameOracle):
        super().__init__(base.labels)
        self.base = base
        self.backend = base.backend
        self.default_limit = base.default_limit

    def _solve(self, omega_a):
        winner, payload = self.base._solve(omega_a.complement())
        return winner.other, payload

    def strategies(self, player):
        return self.base.strategies(player.other)

    def outcome(self, x, y):
        return self.base.outcome(y, x)

    def payload_to_json(self, player, payload):
        return self.base.payload_to_json(player.other, payload)

    def payload_from_json(self, player, data):
        return self.base.payload_from_json(player.other, data)

    def transpose(self):
        return self.base

    def expand(self, limit=None):
        exp = self.base.expand(limit)
        return Expansion(exp.form.transpose(), exp.cols, exp.rows)


def _check_partition(oracle: GameOracle, part) -> OutcomeSet:
    omega_a = part.omega_a if isinstance(part, Pm1Partition) else part
    if omega_a.size != oracle.n_outcomes:
        raise InvalidInstance(
            f"partition over {omega_a.size} outcomes, oracle has {oracle.n_outcomes}")
    return omega_a


def solve_pm1(oracle: GameOracle, part) -> Pm1Result:
    """Solve the +-1 game on ``part`` (a :class:`Pm1Partition` or Alice's set)."""
    omega_a = _check_partition(oracle, part)
    winner, payload = oracle._solve(omega_a)
    return Pm1Result(winner, oracle.handle(winner, payload), 1)


def contains_edge(oracle: GameOracle, candidate: OutcomeSet) -> Tuple[bool, StrategyHandle]:
    """Does ``candidate`` contain the support of some Alice strategy?

    The handle is Alice's witness (support inside ``candidate``) on a yes, and
    Bob's certificate (support inside the complement) on a no.
    """
    res = solve_pm1(oracle, candidate)
    return res.winner is Player.ALICE, res.strategy


def minimal_winning_strategy(oracle: GameOracle, part) -> Pm1Result:
    """Solve ``part`` and shrink the winner's set to an inclusion-minimal winning support.

    Outcomes are moved from the winner's set to the loser's one in ascending
    index order; a move is kept whenever the winner still wins. A single pass
    suffices because winning is monotone in the winner's set.
    """
    omega_a = _check_partition(oracle, part)
    first = solve_pm1(oracle, omega_a)
    winner, handle, queries = first.winner, first.strategy, 1
    own = omega_a if winner is Player.ALICE else omega_a.complement()
    for i in list(own):
        trial = own.remove(i)
        res = solve_pm1(oracle, trial if winner is Player.ALICE else trial.complement())
        queries += 1
        if res.winner is winner:
            own, handle = trial, res.strategy
    return Pm1Result(winner, handle, queries)
