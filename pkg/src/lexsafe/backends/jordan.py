"""Jordan game forms: areas of a map of the square, W-E against N-S connectors.

Alice's strategies are inclusion-minimal sets of areas connecting the West
and East sides, Bob's connect North and South. A strategy payload is an
:class:`~lexsafe.core.OutcomeSet` of areas.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, List, Sequence, Tuple

from ..core import OutcomeSet, Player
from ..errors import InvalidInstance, InvalidMap, SizeLimitExceeded
from ..oracle import GameOracle

SIDES = ("N", "E", "S", "W")
SIDE_PAIRS = {Player.ALICE: ("W", "E"), Player.BOB: ("N", "S")}


class JordanMap(GameOracle):
    backend = "jordan"
    default_limit = 4096
    area_limit = 12

    def __init__(self, areas: Sequence[str], adjacency: Iterable[Tuple[str, str]],
                 sides: Dict[str, Sequence[str]]):
        super().__init__(areas)
        p = self.n_outcomes
        index = {a: i for i, a in enumerate(self.labels)}
        neighbours = [0] * p
        for a, b in adjacency:
            if a not in index or b not in index:
                raise InvalidInstance(f"adjacency ({a!r}, {b!r}) mentions an unknown area")
            if a == b:
                raise InvalidInstance(f"area {a!r} listed as adjacent to itself")
            neighbours[index[a]] |= 1 << index[b]
            neighbours[index[b]] |= 1 << index[a]
        self.neighbours = tuple(neighbours)
        contacts = {}
        for side in SIDES:
            members = sides.get(side, ())
            if not members:
                raise InvalidInstance(f"side {side} has no contact area")
            try:
                contacts[side] = OutcomeSet.of(p, [index[a] for a in members])
            except KeyError as exc:
                raise InvalidInstance(f"side {side} lists unknown area {exc.args[0]!r}") from None
        self.contacts = contacts

    def reach(self, allowed: OutcomeSet, start: str) -> OutcomeSet:
        """Areas of ``allowed`` reachable from the ``start`` side by breadth-first search."""
        seen = self.contacts[start].mask & allowed.mask
        queue = deque(OutcomeSet(self.n_outcomes, seen))
        while queue:
            v = queue.popleft()
            new = self.neighbours[v] & allowed.mask & ~seen
            seen |= new
            queue.extend(OutcomeSet(self.n_outcomes, new))
        return OutcomeSet(self.n_outcomes, seen)

    def connects(self, areas: OutcomeSet, side_pair: Tuple[str, str]) -> bool:
        start, goal = side_pair
        return bool(self.reach(areas, start) & self.contacts[goal])

    def _solve(self, omega_a):
        omega_b = omega_a.complement()
        bob = self.reach(omega_b, "N")
        alice = self.reach(omega_a, "W")
        bob_wins = bool(bob & self.contacts["S"])
        alice_wins = bool(alice & self.contacts["E"])
        if bob_wins == alice_wins:
            raise InvalidMap(
                f"{'both' if bob_wins else 'neither'} connectivity searches succeed for"
                f" Alice set {[self.labels[i] for i in omega_a]}; the map violates the degree-3 border condition")
        if bob_wins:
            return Player.BOB, minimize_connector(self, bob, SIDE_PAIRS[Player.BOB])
        return Player.ALICE, minimize_connector(self, alice, SIDE_PAIRS[Player.ALICE])

    def strategies(self, player):
        return iter(minimal_connectors(self, SIDE_PAIRS[player]))

    def outcome(self, x, y):
        both = x & y
        if not both:
            raise InvalidMap(f"connectors {list(x)} and {list(y)} are disjoint")
        return both.min()

    def cell_correspondence(self, x, y) -> OutcomeSet:
        """All outcomes the correspondence allows at ``(x, y)``."""
        return x & y

    def expand(self, limit=None):
        if self.n_outcomes > self.area_limit:
            raise SizeLimitExceeded(f"Jordan expansion limited to {self.area_limit} areas")
        return super().expand(limit)

    def as_strategy(self, player: Player, areas: OutcomeSet) -> OutcomeSet:
        """Accept any connecting set and reduce it to a minimal connector."""
        pair = SIDE_PAIRS[player]
        if not self.connects(areas, pair):
            raise InvalidInstance(f"areas {[self.labels[i] for i in areas]} do not connect {pair[0]}-{pair[1]}")
        return minimize_connector(self, areas, pair)

    def payload_to_json(self, player, payload):
        return [self.labels[i] for i in payload]

    def payload_from_json(self, player, data):
        index = {a: i for i, a in enumerate(self.labels)}
        try:
            areas = OutcomeSet.of(self.n_outcomes, [index[a] for a in data])
        except KeyError as exc:
            raise InvalidInstance(f"unknown area {exc.args[0]!r}") from None
        return self.as_strategy(player, areas)


def minimize_connector(jmap: JordanMap, areas: OutcomeSet, side_pair: Tuple[str, str]) -> OutcomeSet:
    """Drop areas in ascending index order while the side pair stays connected."""
    for i in list(areas):
        trial = areas.remove(i)
        if jmap.connects(trial, side_pair):
            areas = trial
    return areas


def minimal_connectors(jmap: JordanMap, side_pair: Tuple[str, str]) -> List[OutcomeSet]:
    """All inclusion-minimal connectors, ordered by size and then by members."""
    p = jmap.n_outcomes
    if p > jmap.area_limit:
        raise SizeLimitExceeded(f"connector enumeration limited to {jmap.area_limit} areas")
    good = {m for m in range(1, 1 << p) if jmap.connects(OutcomeSet(p, m), side_pair)}
    minimal = [m for m in good if not any(m & ~(1 << i) in good for i in range(p) if m >> i & 1)]
    out = [OutcomeSet(p, m) for m in minimal]
    out.sort(key=lambda s: (len(s), list(s)))
    return out


def brick_wall(rows: Sequence[Sequence[int]], width: int, prefix: str = "r") -> JordanMap:
    """Map of the square made of horizontal bricks.

    ``rows[k]`` lists the interior cut positions (0 < cut < width) of brick
    row ``k``, counted from the North side. Adjacent rows must not share a
    cut, so every border junction has degree 3.
    """
    for upper, lower in zip(rows, rows[1:]):
        if set(upper) & set(lower):
            raise InvalidInstance("adjacent brick rows share a cut; the junction would have degree 4")
    bricks = []
    for k, cuts in enumerate(rows):
        edges = [0, *sorted(cuts), width]
        if any(a >= b for a, b in zip(edges, edges[1:])) or edges[-2] >= width:
            raise InvalidInstance(f"bad cuts {cuts} for width {width}")
        bricks.append([(f"{prefix}{k + 1}{chr(ord('a') + j)}", lo, hi)
                       for j, (lo, hi) in enumerate(zip(edges, edges[1:]))])
    names = [b[0] for row in bricks for b in row]
    adjacency = []
    for row in bricks:
        adjacency += [(a[0], b[0]) for a, b in zip(row, row[1:])]
    for upper, lower in zip(bricks, bricks[1:]):
        adjacency += [(a[0], b[0]) for a in upper for b in lower if max(a[1], b[1]) < min(a[2], b[2])]
    sides = {
        "N": [b[0] for b in bricks[0]],
        "S": [b[0] for b in bricks[-1]],
        "W": [row[0][0] for row in bricks],
        "E": [row[-1][0] for row in bricks],
    }
    return JordanMap(names, adjacency, sides)


def hex_board(n: int) -> JordanMap:
    """An ``n`` x ``n`` Hex board: hexagonal cells, rows run West to East."""
    names = [f"h{r + 1}-{c + 1}" for r in range(n) for c in range(n)]
    adjacency = []
    for r in range(n):
        for c in range(n):
            for dr, dc in ((0, 1), (1, 0), (1, -1)):
                r2, c2 = r + dr, c + dc
                if 0 <= r2 < n and 0 <= c2 < n:
                    adjacency.append((f"h{r + 1}-{c + 1}", f"h{r2 + 1}-{c2 + 1}"))
    sides = {
        "N": [f"h1-{c + 1}" for c in range(n)],
        "S": [f"h{n}-{c + 1}" for c in range(n)],
        "W": [f"h{r + 1}-1" for r in range(n)],
        "E": [f"h{r + 1}-{n}" for r in range(n)],
    }
    return JordanMap(names, adjacency, sides)
