"""Monotone bargaining schemes.

Alice owns items a1 < ... < am, Bob owns b1 < ... < bn. Outcomes are the
pairs (ai, bj), indexed row-major. Alice's strategy is a non-decreasing map
A -> B stored as a tuple of 0-based b indices; Bob's is a non-decreasing map
B -> A stored likewise.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Optional, Tuple

from ..core import OutcomeSet, Player
from ..errors import InternalError, InvalidInstance, SizeLimitExceeded
from ..oracle import GameOracle


def count_strategies(m: int, n: int) -> Tuple[int, int, int]:
    """Numbers of Alice strategies, Bob strategies and outcomes."""
    if m < 1 or n < 1:
        raise InvalidInstance("bargaining needs m, n >= 1")
    return comb(m + n - 1, m), comb(m + n - 1, n), m * n


def monotone_maps(size: int, codomain: int):
    """Non-decreasing tuples of length ``size`` over ``range(codomain)``, lexicographically."""
    return itertools.combinations_with_replacement(range(codomain), size)


class MbScheme(GameOracle):
    backend = "bargaining"
    default_limit = 3003

    def __init__(self, m: int, n: int):
        if isinstance(m, bool) or isinstance(n, bool) or int(m) != m or int(n) != n or m < 1 or n < 1:
            raise InvalidInstance(f"bargaining needs integers m, n >= 1, got {m!r}, {n!r}")
        self.m, self.n = int(m), int(n)
        super().__init__([f"a{i + 1}b{j + 1}" for i in range(self.m) for j in range(self.n)])

    def pair(self, i: int, j: int) -> int:
        return i * self.n + j

    def unpair(self, outcome: int) -> Tuple[int, int]:
        return divmod(outcome, self.n)

    def count_strategies(self):
        nx, ny, _ = count_strategies(self.m, self.n)
        return nx, ny

    def strategies(self, player):
        if player is Player.ALICE:
            return monotone_maps(self.m, self.n)
        return monotone_maps(self.n, self.m)

    def expand(self, limit=None):
        limit = self.default_limit if limit is None else limit
        if max(self.count_strategies()) > limit:
            raise SizeLimitExceeded(
                f"bargaining {self.m}x{self.n} has {self.count_strategies()} strategies; limit {limit}")
        return super().expand(limit)

    def outcome(self, x, y):
        return deal(self, x, y)

    def _solve(self, omega_a):
        return solve_sweep(self, omega_a)

    def check_map(self, player: Player, payload) -> tuple:
        size, codomain = (self.m, self.n) if player is Player.ALICE else (self.n, self.m)
        payload = tuple(payload)
        if len(payload) != size or any(not 0 <= v < codomain for v in payload):
            raise InvalidInstance(f"{player.value} map {payload} has the wrong shape")
        if any(a > b for a, b in zip(payload, payload[1:])):
            raise InvalidInstance(f"{player.value} map {payload} is not monotone")
        return payload

    def payload_to_json(self, player, payload):
        prefix = "b" if player is Player.ALICE else "a"
        return [f"{prefix}{v + 1}" for v in payload]

    def payload_from_json(self, player, data):
        prefix = "b" if player is Player.ALICE else "a"
        try:
            values = [int(s[1:]) - 1 for s in data if s.startswith(prefix)]
        except (TypeError, ValueError, AttributeError):
            raise InvalidInstance(f"cannot read {player.value} map {data!r}") from None
        if len(values) != len(data):
            raise InvalidInstance(f"{player.value} map {data!r} must list {prefix}-items")
        return self.check_map(player, values)


def deal(scheme: MbScheme, x, y) -> int:
    """The deal reached by walking a1 -> x(a1) -> y(x(a1)) -> ... until a 2-cycle."""
    a = 0
    seen = set()
    while a not in seen:
        seen.add(a)
        b = x[a]
        if y[b] == a:
            return scheme.pair(a, b)
        a = y[b]
    raise InternalError(f"play of {x} against {y} cycles without a deal; a map is not monotone")


def solve_sweep(scheme: MbScheme, omega_a: OutcomeSet):
    """Greedy sweep over Alice's items with a single pointer into B.

    Each a_i takes the smallest b at or after the pointer with (a_i, b) won by
    Alice. If the sweep stalls at a_k, Bob answers every b in the block the
    sweep passed while handling a_i with a_i, and every b from the last
    pointer onwards with a_k; all those pairs are his.
    """
    m, n = scheme.m, scheme.n
    x = []
    pointer = 0
    for i in range(m):
        b = next((j for j in range(pointer, n) if scheme.pair(i, j) in omega_a), None)
        if b is None:
            y = [0] * n
            starts = [0, *x]
            for k in range(i + 1):
                stop = x[k] if k < i else n
                for j in range(starts[k], stop):
                    y[j] = k
            return Player.BOB, tuple(y)
        x.append(b)
        pointer = b
    return Player.ALICE, tuple(x)


def solve_alternating(scheme: MbScheme, omega_a: OutcomeSet):
    """The alternating a/b variant of the greedy sweep; same winner, possibly other witness."""
    m, n = scheme.m, scheme.n
    a_marks, b_marks = [0], []
    a_k, b_prev = 0, 0
    while True:
        b_k = next((j for j in range(b_prev, n) if scheme.pair(a_k, j) in omega_a), None)
        if b_k is None:
            y = [0] * n
            bounds = [0, *b_marks, n]
            for k, a_i in enumerate(a_marks):
                for j in range(bounds[k], bounds[k + 1]):
                    y[j] = a_i
            return Player.BOB, tuple(y)
        b_marks.append(b_k)
        a_next = next((i for i in range(a_k, m) if scheme.pair(i, b_k) not in omega_a), None)
        if a_next is None:
            x = [0] * m
            bounds = [*a_marks, m]
            for k, b_j in enumerate(b_marks):
                for i in range(bounds[k], bounds[k + 1]):
                    x[i] = b_j
            return Player.ALICE, tuple(x)
        a_marks.append(a_next)
        a_k, b_prev = a_next, b_k
