"""Lexicographically safe Nash equilibria from containment queries.

The engine only talks to a :class:`~lexsafe.oracle.GameOracle`, never to an
explicit matrix, so it runs in polynomially many +-1 solves even when the
strategy sets are exponential.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import NamedTuple

from .core import OutcomeSet, Player, Preference, pref_max
from .errors import InternalError, InvalidInstance
from .oracle import GameOracle, StrategyHandle, contains_edge


class SupportResult(NamedTuple):
    support: OutcomeSet
    strategy: StrategyHandle
    queries_used: int


@dataclass(frozen=True)
class LexsafeNe:
    """One member of a lexsafe equilibrium box.

    ``support_own`` is the lexmax support of ``player``'s strategy and
    ``support_other`` the complementary support of the opponent's best
    response; they meet exactly in ``ne_outcome``.
    """

    player: Player
    x_strategy: StrategyHandle
    y_strategy: StrategyHandle
    support_own: OutcomeSet
    support_other: OutcomeSet
    ne_outcome: int
    lexmax_queries: int
    complement_queries: int

    @property
    def queries_used(self) -> int:
        return self.lexmax_queries + self.complement_queries

    @property
    def own_strategy(self) -> StrategyHandle:
        return self.x_strategy if self.player is Player.ALICE else self.y_strategy

    @property
    def other_strategy(self) -> StrategyHandle:
        return self.y_strategy if self.player is Player.ALICE else self.x_strategy


def lexmax_support(oracle: GameOracle, pref: Preference, dichotomy: bool = False) -> SupportResult:
    """Lexicographically best Alice support, found with containment queries.

    Outcomes are scanned from worst to best. With the confirmed prefix ``K``
    and tail ``T(t)`` (outcomes of rank >= t), the query "does K + T(t) contain
    an edge" is monotone in t; the last positive t names the next member of
    the support. A positive answer for ``K`` alone ends the search.
    """
    p = oracle.n_outcomes
    if pref.size != p:
        raise InvalidInstance(f"preference over {pref.size} outcomes, oracle has {p}")
    order = pref.order
    full = OutcomeSet.full(p)

    def tail(t):
        return OutcomeSet.of(p, order[t:])

    ok, witness = contains_edge(oracle, full)
    queries = 1
    if not ok:
        raise InternalError("Alice has no strategy whose support lies inside the full outcome set")
    confirmed = OutcomeSet.empty(p)
    start = 0
    while True:
        # confirmed | tail(start) is known positive and `witness` certifies it
        best = start
        if dichotomy:
            lo, hi = start, p + 1
            while hi - lo > 1:
                mid = (lo + hi) // 2
                ok, w = contains_edge(oracle, confirmed | tail(mid))
                queries += 1
                if ok:
                    lo, witness = mid, w
                else:
                    hi = mid
            best = lo
        else:
            for t in range(start + 1, p + 1):
                ok, w = contains_edge(oracle, confirmed | tail(t))
                queries += 1
                if not ok:
                    break
                best, witness = t, w
        if best == p:
            return SupportResult(confirmed, witness, queries)
        confirmed = confirmed.add(order[best])
        start = best + 1


def complement_edge(oracle: GameOracle, a_l: OutcomeSet, omega_star: int, pref: Preference) -> SupportResult:
    """Bob support meeting ``a_l`` only in ``omega_star`` and otherwise worse than it.

    Starts from every outcome outside ``a_l - {omega_star}`` that ``pref`` does
    not rank above ``omega_star`` and drops outcomes in ascending index order
    while Bob still wins on what is left.
    """
    p = oracle.n_outcomes
    if omega_star not in a_l:
        raise InvalidInstance(f"outcome {omega_star} is not in the lexmax support")
    full = OutcomeSet.full(p)
    excluded = a_l.remove(omega_star) | pref.better_than(omega_star)
    current = full - excluded
    ok, witness = contains_edge(oracle, excluded)
    queries = 1
    if ok:
        raise InternalError(
            f"Bob cannot win inside {list(current)}; the form cannot be tight")
    for i in list(current):
        if i == omega_star:
            continue  # removing it leaves all of a_l on Alice's side
        trial = current.remove(i)
        ok, w = contains_edge(oracle, full - trial)
        queries += 1
        if not ok:
            current, witness = trial, w
    return SupportResult(current, witness, queries)


def lexsafe_ne(oracle: GameOracle, pref_own: Preference, pref_other: Preference,
               player: Player = Player.ALICE, dichotomy: bool = False) -> LexsafeNe:
    """Lexsafe equilibrium of ``player``: their lexsafe strategy plus a special best response."""
    player = Player(player)
    view = oracle if player is Player.ALICE else oracle.transpose()
    a_l, own, q_lex = lexmax_support(view, pref_own, dichotomy=dichotomy)
    omega_star = pref_max(a_l, pref_other)
    b_m, other, q_comp = complement_edge(view, a_l, omega_star, pref_own)
    own = dataclasses.replace(own, player=player)
    other = dataclasses.replace(other, player=player.other)
    x, y = (own, other) if player is Player.ALICE else (other, own)
    return LexsafeNe(player, x, y, a_l, b_m, omega_star, q_lex, q_comp)


def certify_ne(ne: LexsafeNe, pref_a: Preference, pref_b: Preference) -> bool:
    """Check the three support conditions that make the pair an equilibrium.

    Against the player's strategy every opponent deviation stays inside
    ``support_own``, whose opponent-best element is ``ne_outcome``; against the
    opponent's strategy every player deviation stays inside ``support_other``,
    whose player-best element is ``ne_outcome``.
    """
    own, other = (pref_a, pref_b) if ne.player is Player.ALICE else (pref_b, pref_a)
    try:
        meet = ne.support_own & ne.support_other
        return (meet == OutcomeSet.of(meet.size, [ne.ne_outcome])
                and pref_max(ne.support_own, other) == ne.ne_outcome
                and pref_max(ne.support_other, own) == ne.ne_outcome)
    except InvalidInstance:
        return False
