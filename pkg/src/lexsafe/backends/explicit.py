"""Explicit game forms and monotone-property forms, plus brute-force tools.

Everything here enumerates: rows, columns, partitions or subsets. These are
the reference implementations the oracle backends are checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core import OutcomeSet, Player, Preference
from ..errors import InvalidInstance, NotTight, SizeLimitExceeded
from ..oracle import Expansion, GameOracle

TIGHTNESS_LIMIT = 20


class ExplicitGameForm(GameOracle):
    """A game form given as a matrix of outcome indices.

    Rows are Alice's strategies, columns Bob's. A strategy payload is simply
    its row or column index.
    """

    backend = "explicit"

    def __init__(self, cells, n_outcomes: Optional[int] = None, labels: Optional[Sequence[str]] = None,
                 check_surjective: bool = True):
        cells = tuple(tuple(int(c) for c in row) for row in cells)
        if not cells or not cells[0]:
            raise InvalidInstance("a game form needs at least one row and one column")
        if any(len(row) != len(cells[0]) for row in cells):
            raise InvalidInstance("ragged game form matrix")
        if n_outcomes is None:
            n_outcomes = len(labels) if labels is not None else max(map(max, cells)) + 1
        if labels is None:
            labels = [f"w{i + 1}" for i in range(n_outcomes)]
        if len(labels) != n_outcomes:
            raise InvalidInstance(f"{len(labels)} labels for {n_outcomes} outcomes")
        super().__init__(labels)
        used = {c for row in cells for c in row}
        if not used <= set(range(n_outcomes)):
            raise InvalidInstance(f"cell outcomes {sorted(used)} outside [0, {n_outcomes})")
        if check_surjective and len(used) != n_outcomes:
            missing = [self.labels[i] for i in range(n_outcomes) if i not in used]
            raise InvalidInstance(f"game form is not surjective; missing outcomes {missing}")
        self.cells = cells
        self._row_masks = tuple(_mask(row) for row in cells)
        self._col_masks = tuple(_mask(col) for col in zip(*cells))

    @classmethod
    def from_labels(cls, matrix, labels: Optional[Sequence[str]] = None) -> "ExplicitGameForm":
        """Build from a matrix of labels; ``labels`` fixes the outcome order."""
        if labels is None:
            labels = []
            for row in matrix:
                for lab in row:
                    if lab not in labels:
                        labels.append(lab)
            labels.sort(key=_natural_key)
        index = {lab: i for i, lab in enumerate(labels)}
        try:
            cells = [[index[lab] for lab in row] for row in matrix]
        except KeyError as exc:
            raise InvalidInstance(f"unknown outcome label {exc.args[0]!r} in matrix") from None
        return cls(cells, len(labels), labels)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.cells), len(self.cells[0])

    def row_support(self, x: int) -> OutcomeSet:
        return OutcomeSet(self.n_outcomes, self._row_masks[x])

    def col_support(self, y: int) -> OutcomeSet:
        return OutcomeSet(self.n_outcomes, self._col_masks[y])

    def support(self, player: Player, s: int) -> OutcomeSet:
        return self.row_support(s) if player is Player.ALICE else self.col_support(s)

    def _solve(self, omega_a):
        a = omega_a.mask
        for x, m in enumerate(self._row_masks):
            if m & ~a == 0:
                return Player.ALICE, x
        for y, m in enumerate(self._col_masks):
            if m & a == 0:
                return Player.BOB, y
        raise NotTight(f"no player wins the +-1 game with Alice set {list(omega_a)}", omega_a)

    def strategies(self, player):
        return iter(range(self.shape[0] if player is Player.ALICE else self.shape[1]))

    def outcome(self, x, y):
        return self.cells[x][y]

    def count_strategies(self):
        return self.shape

    def transpose(self) -> "ExplicitGameForm":
        return ExplicitGameForm(list(zip(*self.cells)), self.n_outcomes, self.labels, check_surjective=False)

    def expand(self, limit=None):
        return Expansion(self, list(range(self.shape[0])), list(range(self.shape[1])))

    def to_labels(self) -> List[List[str]]:
        return [[self.labels[c] for c in row] for row in self.cells]

    def __eq__(self, other):
        return (isinstance(other, ExplicitGameForm) and self.cells == other.cells
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.cells, self.labels))

    def __repr__(self):
        return f"ExplicitGameForm({self.to_labels()})"


def _mask(values) -> int:
    m = 0
    for v in values:
        m |= 1 << v
    return m


def _natural_key(label: str):
    return [int(tok) if tok.isdigit() else tok for tok in _split_digits(label)]


def _split_digits(s: str):
    return [''.join(g) for _, g in itertools.groupby(s, str.isdigit)]


def solve_pm1_explicit(form: ExplicitGameForm, part):
    from ..oracle import solve_pm1
    return solve_pm1(form, part)


def untight_partitions(form: ExplicitGameForm, limit: int = TIGHTNESS_LIMIT) -> np.ndarray:
    """Alice masks of every +-1 game that neither player wins, in ascending order."""
    p = form.n_outcomes
    if p > limit:
        raise SizeLimitExceeded(f"tightness check over 2^{p} partitions exceeds limit 2^{limit}")
    masks = np.arange(1 << p, dtype=np.int64)
    won = np.zeros(masks.shape, dtype=bool)
    for r in set(form._row_masks):
        won |= (masks & r) == r
    for c in set(form._col_masks):
        won |= (masks & c) == 0
    return masks[~won]


def is_tight(form: ExplicitGameForm, limit: int = TIGHTNESS_LIMIT) -> bool:
    """Tightness as +-1 solvability: every one of the 2^p partitions has a winner."""
    return untight_partitions(form, limit).size == 0


def first_untight_partition(form: ExplicitGameForm, limit: int = TIGHTNESS_LIMIT) -> Optional[OutcomeSet]:
    bad = untight_partitions(form, limit)
    return OutcomeSet(form.n_outcomes, int(bad[0])) if bad.size else None


def enumerate_ne(form: ExplicitGameForm, pref_a: Preference, pref_b: Preference) -> List[Tuple[int, int]]:
    """All pure Nash equilibria ``(x, y)`` under strict preferences."""
    cells = np.asarray(form.cells)
    ra = np.asarray(pref_a.ranks)[cells]
    rb = np.asarray(pref_b.ranks)[cells]
    ok = (ra == ra.max(axis=0, keepdims=True)) & (rb == rb.max(axis=1, keepdims=True))
    return [(int(x), int(y)) for x, y in zip(*np.nonzero(ok))]


def is_nash(form: ExplicitGameForm, x: int, y: int, pref_a: Preference, pref_b: Preference) -> bool:
    o = form.cells[x][y]
    if any(pref_a.prefers(form.cells[x2][y], o) for x2 in range(form.shape[0])):
        return False
    return not any(pref_b.prefers(form.cells[x][y2], o) for y2 in range(form.shape[1]))


@dataclass(frozen=True)
class Hypergraphs:
    a_edges: List[OutcomeSet]
    b_edges: List[OutcomeSet]


def extract_hypergraphs(form: ExplicitGameForm) -> Hypergraphs:
    rows, cols = form.shape
    return Hypergraphs([form.row_support(x) for x in range(rows)],
                       [form.col_support(y) for y in range(cols)])


def _minimal_indices(masks) -> List[int]:
    keep = []
    for i, m in enumerate(masks):
        dominated = any(o != m and o & ~m == 0 for o in masks)
        duplicate = any(masks[j] == m for j in range(i))
        if not dominated and not duplicate:
            keep.append(i)
    return keep


def reduce_minimal(form: ExplicitGameForm) -> ExplicitGameForm:
    """Keep only minimal strategies of both players, one per distinct support.

    Both selections use the supports of the input form. The result keeps the
    full outcome list even if some outcome no longer occurs.
    """
    rows = _minimal_indices(form._row_masks)
    cols = _minimal_indices(form._col_masks)
    cells = [[form.cells[x][y] for y in cols] for x in rows]
    return ExplicitGameForm(cells, form.n_outcomes, form.labels, check_surjective=False)


class MonotonePropertyForm(GameOracle):
    """Game correspondence of a monotone property given by its minimal sets.

    Alice's strategies are the generators; Bob's are the minimal transversals
    of the generators. The selected outcome of a situation is the lowest-index
    element of the intersection.
    """

    backend = "monotone"
    default_limit = 4096

    def __init__(self, labels: Sequence[str], generators: Sequence[OutcomeSet]):
        super().__init__(labels)
        p = self.n_outcomes
        gens = []
        for g in generators:
            if not isinstance(g, OutcomeSet):
                g = OutcomeSet.of(p, g)
            if g.size != p:
                raise InvalidInstance("generator over the wrong universe")
            if not g:
                raise InvalidInstance("empty generator makes the property trivial")
            gens.append(g)
        if not gens:
            raise InvalidInstance("a monotone property needs at least one generator")
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and h <= g:
                    raise InvalidInstance(f"generator {list(g)} contains generator {list(h)}")
        self.generators = tuple(gens)

    def satisfies(self, s: OutcomeSet) -> bool:
        return any(g <= s for g in self.generators)

    def _solve(self, omega_a):
        for g in self.generators:
            if g <= omega_a:
                return Player.ALICE, g
        witness = omega_a.complement()
        for i in list(witness):
            trial = witness.remove(i)
            if not self.satisfies(trial.complement()):
                witness = trial
        return Player.BOB, witness

    def strategies(self, player):
        if player is Player.ALICE:
            return iter(self.generators)
        return iter(minimal_transversals(self.generators, self.n_outcomes))

    def outcome(self, x, y):
        both = x & y
        if not both:
            raise InvalidInstance(f"strategies {list(x)} and {list(y)} do not intersect")
        return both.min()

    def payload_to_json(self, player, payload):
        return [self.labels[i] for i in payload]

    def payload_from_json(self, player, data):
        index = {lab: i for i, lab in enumerate(self.labels)}
        try:
            s = OutcomeSet.of(self.n_outcomes, [index[lab] for lab in data])
        except KeyError as exc:
            raise InvalidInstance(f"unknown outcome {exc.args[0]!r}") from None
        strategies = self.generators if player is Player.ALICE else self.strategies(player)
        if s not in strategies:
            raise InvalidInstance(f"{[self.labels[i] for i in s]} is not a {player.value} strategy")
        return s


def minimal_transversals(edges: Sequence[OutcomeSet], p: int, limit: int = TIGHTNESS_LIMIT) -> List[OutcomeSet]:
    """Inclusion-minimal sets hitting every edge, by subset enumeration, ordered by (size, members)."""
    if p > limit:
        raise SizeLimitExceeded(f"transversal enumeration over 2^{p} subsets exceeds limit 2^{limit}")
    masks = [e.mask for e in edges]
    hits = [s for s in range(1 << p) if all(s & m for m in masks)]
    hit_set = set(hits)
    minimal = [s for s in hits if not any((s & ~(1 << i)) in hit_set for i in range(p) if s >> i & 1)]
    out = [OutcomeSet(p, s) for s in minimal]
    out.sort(key=lambda o: (len(o), list(o)))
    return out
