"""Outcome sets, preferences and the lexicographic order over subsets.

Outcomes are dense indices ``0 .. p-1``. An :class:`OutcomeSet` stores its
members as an integer bitmask, so set algebra is a handful of integer ops
and iteration is always in ascending index order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidInstance, InvalidPreference


class Player(str, enum.Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


@dataclass(frozen=True)
class OutcomeSet:
    """Immutable subset of the outcome universe ``range(size)``."""

    size: int
    mask: int = 0

    def __post_init__(self):
        if self.size < 0:
            raise InvalidInstance(f"universe size must be non-negative, got {self.size}")
        if self.mask < 0 or self.mask >> self.size:
            raise InvalidInstance(f"mask {self.mask:#x} does not fit a universe of size {self.size}")

    @classmethod
    def of(cls, size: int, members: Iterable[int] = ()) -> "OutcomeSet":
        mask = 0
        for i in members:
            if not 0 <= i < size:
                raise InvalidInstance(f"outcome index {i} outside [0, {size})")
            mask |= 1 << i
        return cls(size, mask)

    @classmethod
    def full(cls, size: int) -> "OutcomeSet":
        return cls(size, (1 << size) - 1)

    @classmethod
    def empty(cls, size: int) -> "OutcomeSet":
        return cls(size, 0)

    def __contains__(self, i) -> bool:
        return 0 <= i < self.size and bool(self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "OutcomeSet") -> None:
        if self.size != other.size:
            raise InvalidInstance(f"universe size mismatch: {self.size} != {other.size}")

    def __or__(self, other: "OutcomeSet") -> "OutcomeSet":
        self._check(other)
        return OutcomeSet(self.size, self.mask | other.mask)

    def __and__(self, other: "OutcomeSet") -> "OutcomeSet":
        self._check(other)
        return OutcomeSet(self.size, self.mask & other.mask)

    def __sub__(self, other: "OutcomeSet") -> "OutcomeSet":
        self._check(other)
        return OutcomeSet(self.size, self.mask & ~other.mask)

    def __xor__(self, other: "OutcomeSet") -> "OutcomeSet":
        self._check(other)
        return OutcomeSet(self.size, self.mask ^ other.mask)

    def __le__(self, other: "OutcomeSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "OutcomeSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "OutcomeSet") -> bool:
        return other <= self

    def __gt__(self, other: "OutcomeSet") -> bool:
        return other < self

    def complement(self) -> "OutcomeSet":
        return OutcomeSet(self.size, ((1 << self.size) - 1) & ~self.mask)

    def add(self, i: int) -> "OutcomeSet":
        return OutcomeSet.of(self.size, [i]) | self

    def remove(self, i: int) -> "OutcomeSet":
        return OutcomeSet(self.size, self.mask & ~(1 << i))

    def min(self) -> int:
        """Canonical (lowest index) member."""
        if not self.mask:
            raise InvalidInstance("empty outcome set has no minimum")
        return (self.mask & -self.mask).bit_length() - 1

    def __repr__(self) -> str:
        return f"OutcomeSet({self.size}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Preference:
    """Strict total order over ``range(p)``; ``order[0]`` is the worst outcome."""

    order: tuple

    def __post_init__(self):
        order = tuple(int(i) for i in self.order)
        if sorted(order) != list(range(len(order))):
            raise InvalidPreference(f"order {order} is not a permutation of range({len(order)})")
        object.__setattr__(self, "order", order)
        rank = [0] * len(order)
        for pos, i in enumerate(order):
            rank[i] = pos
        object.__setattr__(self, "_rank", tuple(rank))

    @property
    def size(self) -> int:
        return len(self.order)

    def rank(self, i: int) -> int:
        """Position of outcome ``i``; larger is better."""
        return self._rank[i]

    @property
    def ranks(self) -> tuple:
        return self._rank

    def prefers(self, i: int, j: int) -> bool:
        """True iff ``i`` is strictly better than ``j``."""
        return self._rank[i] > self._rank[j]

    def better_than(self, i: int) -> OutcomeSet:
        """All outcomes strictly preferred to ``i``."""
        return OutcomeSet.of(self.size, self.order[self._rank[i] + 1:])

    @property
    def best(self) -> int:
        return self.order[-1]

    def reversed(self) -> "Preference":
        return Preference(self.order[::-1])


def validate_preference(raw: Sequence, p: int, labels: Optional[Sequence[str]] = None) -> Preference:
    """Build a :class:`Preference` from a worst-to-best sequence.

    ``raw`` holds outcome labels when ``labels`` is given, otherwise integer
    indices. Repeats, gaps and unknown labels raise :class:`InvalidPreference`
    naming the offending label.
    """
    if labels is not None:
        index = {lab: i for i, lab in enumerate(labels)}
    seen = set()
    order = []
    for item in raw:
        if labels is not None:
            if item not in index:
                raise InvalidPreference(f"unknown outcome label {item!r}", label=item)
            i = index[item]
        else:
            if isinstance(item, bool) or not isinstance(item, int) or not 0 <= item < p:
                raise InvalidPreference(f"unknown outcome {item!r}", label=item)
            i = item
        if i in seen:
            raise InvalidPreference(f"outcome {item!r} listed twice", label=item)
        seen.add(i)
        order.append(i)
    if len(order) != p:
        missing = [labels[i] if labels is not None else i for i in range(p) if i not in seen]
        raise InvalidPreference(f"preference misses outcomes {missing}", label=missing[0])
    return Preference(tuple(order))


def lex_compare(s: OutcomeSet, t: OutcomeSet, pref: Preference) -> int:
    """Compare two sets in the lexicographic order induced by ``pref``.

    Returns 1 if ``s`` is lexicographically better, -1 if worse, 0 if equal.
    The winner is the set that does *not* contain the worst element of the
    symmetric difference, so any strict subset beats its superset and the
    empty set beats everything.
    """
    s._check(t)
    if s.size != pref.size:
        raise InvalidInstance(f"preference over {pref.size} outcomes, sets over {s.size}")
    diff = s.mask ^ t.mask
    if not diff:
        return 0
    for i in pref.order:
        if diff >> i & 1:
            return -1 if s.mask >> i & 1 else 1
    raise AssertionError("unreachable")


def lex_key(s: OutcomeSet, pref: Preference) -> tuple:
    """Sort key with ``lex_key(s) > lex_key(t)`` iff ``s`` is lexicographically better."""
    return tuple(0 if i in s else 1 for i in pref.order)


def pref_max(s: OutcomeSet, pref: Preference) -> int:
    """The best member of ``s`` under ``pref``."""
    if not s:
        raise InvalidInstance("cannot take the maximum of an empty outcome set")
    return max(s, key=pref.rank)


@dataclass(frozen=True)
class Pm1Partition:
    """A +-1 game: Alice wins on ``omega_a``, Bob on its complement."""

    omega_a: OutcomeSet

    @property
    def omega_b(self) -> OutcomeSet:
        return self.omega_a.complement()

    @property
    def size(self) -> int:
        return self.omega_a.size

    @classmethod
    def from_bob(cls, omega_b: OutcomeSet) -> "Pm1Partition":
        return cls(omega_b.complement())
