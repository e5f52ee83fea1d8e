"""Veto voting schemes with card budgets and veto resistances.

A strategy is a distribution of the owner's veto cards over the candidates,
stored as a tuple of non-negative card counts. A candidate receiving at
least its resistance in combined cards is vetoed; the lowest-index survivor
is elected.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from ..core import OutcomeSet, Player
from ..errors import InvalidInstance, SizeLimitExceeded
from ..oracle import GameOracle

MAX_VALUE = 2 ** 31 - 1


class VetoScheme(GameOracle):
    backend = "veto"
    default_limit = 5000

    def __init__(self, mu_a: int, mu_b: int, resistance: Sequence[int], labels: Sequence[str] = None):
        if labels is None:
            labels = [f"w{i + 1}" for i in range(len(resistance))]
        if len(labels) != len(resistance):
            raise InvalidInstance(f"{len(labels)} candidate labels for {len(resistance)} resistances")
        super().__init__(labels)
        self.mu_a, self.mu_b = mu_a, mu_b
        self.resistance = tuple(resistance)
        validate_scheme(self)

    @property
    def budgets(self):
        return {Player.ALICE: self.mu_a, Player.BOB: self.mu_b}

    def weight(self, s: OutcomeSet) -> int:
        return sum(self.resistance[i] for i in s)

    def _solve(self, omega_a):
        omega_b = omega_a.complement()
        if self.weight(omega_b) <= self.mu_a:
            return Player.ALICE, self._veto_all(omega_b, self.mu_a)
        return Player.BOB, self._veto_all(omega_a, self.mu_b)

    def _veto_all(self, targets: OutcomeSet, budget: int) -> tuple:
        cards = [0] * self.n_outcomes
        for i in targets:
            cards[i] = self.resistance[i]
        # leftover cards cannot rescue a target, and survivors exist by the budget identity
        cards[targets.min() if targets else 0] += budget - self.weight(targets)
        return tuple(cards)

    def survivors(self, x, y) -> OutcomeSet:
        return OutcomeSet.of(self.n_outcomes,
                             [i for i, lam in enumerate(self.resistance) if x[i] + y[i] < lam])

    def outcome(self, x, y):
        return self.survivors(x, y).min()

    def count_strategies(self):
        p = self.n_outcomes
        return comb(self.mu_a + p - 1, p - 1), comb(self.mu_b + p - 1, p - 1)

    def strategies(self, player):
        return compositions(self.budgets[player], self.n_outcomes)

    def expand(self, limit=None):
        limit = self.default_limit if limit is None else limit
        if max(self.count_strategies()) > limit:
            raise SizeLimitExceeded(f"veto expansion has {self.count_strategies()} strategies; limit {limit}")
        return super().expand(limit)

    def payload_to_json(self, player, payload):
        return {lab: c for lab, c in zip(self.labels, payload) if c}

    def payload_from_json(self, player, data):
        unknown = set(data) - set(self.labels)
        if unknown:
            raise InvalidInstance(f"unknown candidates {sorted(unknown)}")
        cards = tuple(int(data.get(lab, 0)) for lab in self.labels)
        if any(c < 0 for c in cards) or sum(cards) != self.budgets[player]:
            raise InvalidInstance(f"{player.value} must distribute exactly {self.budgets[player]} cards")
        return cards


def validate_scheme(scheme: VetoScheme) -> None:
    """Positive integer budgets and resistances with mu_A + mu_B + 1 = sum of resistances."""
    values = [scheme.mu_a, scheme.mu_b, *scheme.resistance]
    if any(isinstance(v, bool) or not isinstance(v, int) or not 0 < v <= MAX_VALUE for v in values):
        raise InvalidInstance(f"budgets and resistances must be integers in [1, {MAX_VALUE}], got {values}")
    total = sum(scheme.resistance)
    if scheme.mu_a + scheme.mu_b + 1 != total:
        raise InvalidInstance(
            f"budget identity violated: mu_A + mu_B + 1 = {scheme.mu_a} + {scheme.mu_b} + 1"
            f" = {scheme.mu_a + scheme.mu_b + 1}, but the resistances sum to {total}")


def compositions(total: int, parts: int):
    """Tuples of ``parts`` non-negative integers summing to ``total``, in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)
