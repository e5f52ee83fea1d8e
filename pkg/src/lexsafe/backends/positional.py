"""Positional game structures on digraphs (DGGS and multi-stage DGGS).

Outcomes are the terminal positions plus, in ``msdggs`` mode, every strongly
connected component that contains a cycle. In ``dggs`` mode all infinite
plays are merged into the single outcome ``c``. A strategy picks one move at
every position its owner controls; the payload is the tuple of chosen
successors (vertex indices) in ascending order of the controlled vertices.
"""

from __future__ import annotations

import heapq
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..core import OutcomeSet, Player
from ..errors import InvalidInstance, SizeLimitExceeded
from ..oracle import GameOracle

logger = logging.getLogger(__name__)

OWNERS = {"A": Player.ALICE, "B": Player.BOB, "T": None}
MODES = ("msdggs", "dggs")
CYCLE_OUTCOME = "c"


def strongly_connected_components(n: int, succ: Sequence[Sequence[int]]) -> List[int]:
    """Tarjan's algorithm, iterative. Returns a component id per vertex.

    Ids are assigned in the order components are completed, which is a
    reverse topological order of the condensation (sinks first).
    """
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: List[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for j in range(i, len(succ[v])):
                w = succ[v][j]
                if index[w] == -1:
                    work.append((v, j + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


@dataclass(frozen=True)
class SccOutcomeMap:
    component: Tuple[int, ...]          # component id per vertex
    members: Tuple[Tuple[int, ...], ...]  # vertices per component, ascending
    cyclic: Tuple[bool, ...]            # component contains a cycle
    outcome_of: Tuple[Optional[int], ...]  # outcome index per component (None if transient)
    labels: Tuple[str, ...]


class PositionalStructure(GameOracle):
    """A finite digraph game with positions owned by Alice (A), Bob (B) or terminal (T)."""

    default_limit = 4096

    def __init__(self, vertices: Sequence[Tuple[str, str]], arcs: Sequence[Tuple[str, str]],
                 initial: str, mode: str = "msdggs"):
        if mode not in MODES:
            raise InvalidInstance(
                f"unsupported positional mode {mode!r}; expected one of {MODES}"
                " (cyclic DGGS with one outcome per dicycle need not be tight)")
        self.mode = mode
        self.backend = mode
        names = [str(name) for name, _ in vertices]
        if len(set(names)) != len(names):
            raise InvalidInstance("duplicate vertex names")
        owners = {}
        for name, owner in vertices:
            if owner not in OWNERS:
                raise InvalidInstance(f"vertex {name!r} has owner {owner!r}; expected A, B or T")
            owners[str(name)] = owner
        out: Dict[str, List[str]] = {name: [] for name in names}
        for u, v in arcs:
            u, v = str(u), str(v)
            if u not in out or v not in out:
                raise InvalidInstance(f"arc ({u!r}, {v!r}) mentions an unknown vertex")
            if v in out[u]:
                raise InvalidInstance(f"duplicate arc ({u!r}, {v!r})")
            out[u].append(v)
        for name in names:
            if owners[name] == "T" and out[name]:
                raise InvalidInstance(f"terminal {name!r} has outgoing arcs")
            if owners[name] != "T" and not out[name]:
                raise InvalidInstance(f"non-terminal {name!r} has no moves")
        initial = str(initial)
        if initial not in out:
            raise InvalidInstance(f"unknown initial vertex {initial!r}")
        if owners[initial] == "T":
            raise InvalidInstance("the initial position must not be terminal")

        reach = {initial}
        frontier = [initial]
        while frontier:
            u = frontier.pop()
            for v in out[u]:
                if v not in reach:
                    reach.add(v)
                    frontier.append(v)
        dropped = [n for n in names if n not in reach]
        if dropped:
            logger.warning("ignoring vertices unreachable from %s: %s", initial, dropped)
        self.names = tuple(n for n in names if n in reach)
        idx = {n: i for i, n in enumerate(self.names)}
        self.owner = tuple(OWNERS[owners[n]] for n in self.names)
        self.succ = tuple(tuple(idx[v] for v in out[n]) for n in self.names)
        self.initial = idx[initial]
        self.controlled = {
            p: tuple(v for v in range(len(self.names)) if self.owner[v] is p) for p in Player
        }
        self.scc = decompose(self)
        super().__init__(self.scc.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    def is_terminal(self, v: int) -> bool:
        return not self.succ[v]

    def vertex_outcome(self, v: int) -> Optional[int]:
        return self.scc.outcome_of[self.scc.component[v]]

    def count_strategies(self):
        return tuple(math.prod(len(self.succ[v]) for v in self.controlled[p]) for p in Player)

    def strategies(self, player):
        verts = self.controlled[player]
        return iter(itertools.product(*(self.succ[v] for v in verts)))

    def expand(self, limit=None):
        limit = self.default_limit if limit is None else limit
        if max(self.count_strategies()) > limit:
            raise SizeLimitExceeded(
                f"positional expansion has {self.count_strategies()} strategies; limit {limit} per player")
        return super().expand(limit)

    def _moves(self, x, y) -> Dict[int, int]:
        moves = dict(zip(self.controlled[Player.ALICE], x))
        moves.update(zip(self.controlled[Player.BOB], y))
        return moves

    def outcome(self, x, y):
        return play(self, x, y)

    def _solve(self, omega_a):
        winner, moves = solve_positional(self, omega_a)
        verts = self.controlled[winner]
        return winner, tuple(moves.get(v, self.succ[v][0]) for v in verts)

    def payload_to_json(self, player, payload):
        return {self.names[v]: self.names[w] for v, w in zip(self.controlled[player], payload)}

    def payload_from_json(self, player, data):
        idx = {n: i for i, n in enumerate(self.names)}
        try:
            payload = tuple(idx[data[self.names[v]]] for v in self.controlled[player])
        except KeyError as exc:
            raise InvalidInstance(f"positional strategy misses or mislabels {exc.args[0]!r}") from None
        for v, w in zip(self.controlled[player], payload):
            if w not in self.succ[v]:
                raise InvalidInstance(f"{self.names[v]} -> {self.names[w]} is not a move")
        return payload


def decompose(structure: PositionalStructure) -> SccOutcomeMap:
    """Strongly connected components and the outcome each one stands for."""
    n = structure.n_vertices
    comp = strongly_connected_components(n, structure.succ)
    n_comp = max(comp) + 1
    members = [[] for _ in range(n_comp)]
    for v in range(n):
        members[comp[v]].append(v)
    cyclic = [len(m) > 1 or m[0] in structure.succ[m[0]] for m in members]
    outcome_of: List[Optional[int]] = [None] * n_comp
    labels = []
    for v in range(n):
        if structure.is_terminal(v):
            outcome_of[comp[v]] = len(labels)
            labels.append(structure.names[v])
    cyclic_comps = sorted((members[c][0], c) for c in range(n_comp) if cyclic[c])
    if structure.mode == "dggs":
        if cyclic_comps:
            if CYCLE_OUTCOME in labels:
                raise InvalidInstance(f"terminal name {CYCLE_OUTCOME!r} clashes with the cycle outcome")
            for _, c in cyclic_comps:
                outcome_of[c] = len(labels)
            labels.append(CYCLE_OUTCOME)
    else:
        for first, c in cyclic_comps:
            label = f"cycle:{structure.names[first]}"
            if label in labels:
                raise InvalidInstance(f"terminal name {label!r} clashes with a cycle outcome")
            outcome_of[c] = len(labels)
            labels.append(label)
    return SccOutcomeMap(tuple(comp), tuple(tuple(m) for m in members), tuple(cyclic),
                         tuple(outcome_of), tuple(labels))


def play(structure: PositionalStructure, x, y) -> int:
    """Outcome of the play from the initial position: a terminal or the lasso's component."""
    moves = structure._moves(x, y)
    seen = set()
    v = structure.initial
    while not structure.is_terminal(v):
        if v in seen:
            return structure.vertex_outcome(v)
        seen.add(v)
        v = moves[v]
    return structure.vertex_outcome(v)


def solve_positional(structure: PositionalStructure, omega_a: OutcomeSet) -> Tuple[Player, Dict[int, int]]:
    """Backward induction generalised to cyclic components.

    Components are evaluated bottom-up. A transient position takes one
    backward-induction step. In a cyclic component whose cycling outcome is
    owned by one player, the opponent wins exactly on their attractor to
    already-evaluated exits they win; the owner wins everywhere else, possibly
    by cycling forever. Returns the winner at the initial position and the
    winning moves recorded for every position.
    """
    scc = structure.scc
    n_comp = len(scc.members)
    succ = structure.succ
    winner: List[Optional[Player]] = [None] * structure.n_vertices
    moves: Dict[int, int] = {}

    def side(outcome: int) -> Player:
        return Player.ALICE if outcome in omega_a else Player.BOB

    comp = scc.component
    pending = [0] * n_comp
    preds: List[set] = [set() for _ in range(n_comp)]
    for v in range(structure.n_vertices):
        for w in succ[v]:
            if comp[w] != comp[v] and comp[v] not in preds[comp[w]]:
                preds[comp[w]].add(comp[v])
                pending[comp[v]] += 1
    ready = [(scc.members[c][0], c) for c in range(n_comp) if pending[c] == 0]
    heapq.heapify(ready)
    while ready:
        _, c = heapq.heappop(ready)
        verts = scc.members[c]
        if not scc.cyclic[c]:
            (v,) = verts
            if structure.is_terminal(v):
                winner[v] = side(scc.outcome_of[c])
            else:
                me = structure.owner[v]
                good = [w for w in succ[v] if winner[w] is me]
                if good:
                    winner[v], moves[v] = me, good[0]
                else:
                    winner[v] = me.other
        else:
            _solve_cyclic(structure, verts, side(scc.outcome_of[c]), winner, moves)
        for d in preds[c]:
            pending[d] -= 1
            if pending[d] == 0:
                heapq.heappush(ready, (scc.members[d][0], d))
    return winner[structure.initial], moves


def _solve_cyclic(structure, verts, cycle_side: Player, winner, moves) -> None:
    succ = structure.succ
    inside = set(verts)
    rival = cycle_side.other
    attr = set()

    def good_for_rival(w):
        return w in attr or (w not in inside and winner[w] is rival)

    changed = True
    while changed:
        changed = False
        for v in verts:
            if v in attr:
                continue
            good = [w for w in succ[v] if good_for_rival(w)]
            if structure.owner[v] is rival and good:
                attr.add(v)
                moves[v] = good[0]
                changed = True
            elif structure.owner[v] is cycle_side and len(good) == len(succ[v]):
                attr.add(v)
                changed = True
    for v in verts:
        if v in attr:
            winner[v] = rival
            continue
        winner[v] = cycle_side
        if structure.owner[v] is cycle_side:
            moves[v] = next(w for w in succ[v]
                            if (w in inside and w not in attr) or (w not in inside and winner[w] is cycle_side))
