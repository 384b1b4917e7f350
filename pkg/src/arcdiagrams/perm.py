"""Cyclic permutations of [n] and their arc diagrams.

A cyclic permutation is written in one-line form starting at 1, for example
``1 3 2 7 8 4 5 6``.  Consecutive entries (including the wrap-around pair)
are the edges of a Hamiltonian cycle on the vertices 1..n.  Drawing the
vertices on a horizontal line and the cycle edges as arcs above it gives
the arc diagram; each arc is stored as an ordered pair ``(i, j)`` with
``i < j`` and every vertex meets exactly two arcs.

Each vertex falls into one of three classes, readable off either the
sequence or the arc set:

- left ramphoid: smaller than both cycle neighbours, so both of its arcs
  open there (it is the smaller endpoint of two arcs);
- right ramphoid: larger than both neighbours, both arcs close there;
- keratoid: between its neighbours, one arc closes and one opens.

A permutation and its reverse traverse the same cycle, so they share one
arc diagram.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotAPermutation, NotNormalized, TooSmall

Arc = tuple[int, int]


def arc_text(arcs: Iterable[Arc], isolated: Iterable[int] = ()) -> str:
    """Brace notation for an arc set, e.g. ``{13,2,48,56,7}``.

    Arcs print as the two endpoints run together when both are single
    digits (``13``), otherwise dash-separated (``4-12``).  Isolated
    vertices print bare.  Items are ordered by their smallest vertex.
    """
    items = sorted([tuple(a) for a in arcs] + [(v,) for v in isolated])
    parts = []
    for item in items:
        if len(item) == 1:
            parts.append(str(item[0]))
        elif item[0] <= 9 and item[1] <= 9:
            parts.append(f"{item[0]}{item[1]}")
        else:
            parts.append(f"{item[0]}-{item[1]}")
    return "{" + ",".join(parts) + "}"


@dataclass(frozen=True, order=True)
class CyclicPerm:
    """A cyclic permutation of {1..n} in one-line form, first entry 1.

    >>> CyclicPerm((1, 3, 2)).n
    3
    """

    seq: tuple[int, ...]

    def __post_init__(self):
        n = len(self.seq)
        if set(self.seq) != set(range(1, n + 1)) or len(set(self.seq)) != n:
            raise NotAPermutation(f"not a permutation of 1..{n}: {self.seq}")
        if n < 3:
            raise TooSmall(f"need at least 3 vertices, got {n}")
        if self.seq[0] != 1:
            raise NotNormalized(f"first entry must be 1, got {self.seq[0]}")

    @property
    def n(self) -> int:
        return len(self.seq)

    def at(self, i: int) -> int:
        """Entry at cyclic position ``i`` (1-based; any integer works)."""
        return self.seq[(i - 1) % self.n]

    def position_of(self, value: int) -> int:
        """1-based position of ``value`` (the inverse permutation)."""
        return self.seq.index(value) + 1

    def reverse(self) -> CyclicPerm:
        """The same cycle walked the other way: entry i becomes entry n+2-i.

        >>> str(CyclicPerm((1, 3, 2, 7, 8, 4, 5, 6)).reverse())
        '1 6 5 4 8 7 2 3'
        """
        n = self.n
        return CyclicPerm(tuple(self.seq[(n - i) % n] for i in range(n)))

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.seq)


def parse_perm(text: str) -> CyclicPerm:
    """Parse a space-separated permutation such as ``"1 3 2 7 8 4 5 6"``."""
    tokens = text.split()
    if not tokens:
        raise NotAPermutation("empty permutation text")
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise NotAPermutation(f"non-integer entry in {text!r}") from exc
    return CyclicPerm(values)


@dataclass(frozen=True)
class CycleDiagram:
    """The arc set of a cyclic permutation: one n-cycle drawn linearly."""

    n: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        if len(self.arcs) != self.n:
            raise ValueError(f"expected {self.n} arcs, got {len(self.arcs)}")
        degree = Counter()
        for i, j in self.arcs:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad arc ({i}, {j}) for n={self.n}")
            degree[i] += 1
            degree[j] += 1
        if any(degree[v] != 2 for v in range(1, self.n + 1)):
            raise ValueError("every vertex must meet exactly two arcs")
        if len(self._walk_from(1)) != self.n:
            raise ValueError("arcs do not form a single spanning cycle")

    def _walk_from(self, start: int) -> list[int]:
        # all degrees are 2, so the components are disjoint cycles; walk one
        neighbours: dict[int, list[int]] = {}
        for i, j in self.arcs:
            neighbours.setdefault(i, []).append(j)
            neighbours.setdefault(j, []).append(i)
        walk = [start]
        prev, cur = None, start
        while True:
            step = next(v for v in neighbours[cur] if v != prev)
            if step == start:
                return walk
            walk.append(step)
            prev, cur = cur, step

    def sorted_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    def __str__(self) -> str:
        return arc_text(self.arcs)


def arc_set(p: CyclicPerm) -> CycleDiagram:
    """Arc diagram of ``p``: one arc per pair of cyclically adjacent entries.

    The closing pair (last entry, first entry) is included, so there are n
    arcs.  A permutation and its reverse give the same diagram.
    """
    n = p.n
    pairs = frozenset(
        (min(p.seq[i], p.seq[(i + 1) % n]), max(p.seq[i], p.seq[(i + 1) % n]))
        for i in range(n)
    )
    return CycleDiagram(n, pairs)


@dataclass(frozen=True)
class Classification:
    """Partition of the vertices into left ramphoids, right ramphoids and
    keratoids.  Always ``|R| == |Rbar|`` and ``2|R| + |K| == n``."""

    R: frozenset[int]
    Rbar: frozenset[int]
    K: frozenset[int]

    def __post_init__(self):
        n = len(self.R) + len(self.Rbar) + len(self.K)
        if self.R | self.Rbar | self.K != set(range(1, n + 1)):
            raise ValueError("classes must partition 1..n")
        if self.R & self.Rbar or self.R & self.K or self.Rbar & self.K:
            raise ValueError("classes must be disjoint")
        if len(self.R) != len(self.Rbar):
            raise ValueError("left and right ramphoids must be equinumerous")

    @property
    def n(self) -> int:
        return len(self.R) + len(self.Rbar) + len(self.K)


def classify(diagram: CycleDiagram) -> Classification:
    """Classify vertices by how often they start or end an arc.

    A vertex that is the smaller endpoint of both its arcs is a left
    ramphoid, the larger endpoint of both is a right ramphoid, and one of
    each makes a keratoid.
    """
    starts = Counter(i for i, _ in diagram.arcs)
    ends = Counter(j for _, j in diagram.arcs)
    R = frozenset(v for v in range(1, diagram.n + 1) if starts[v] == 2)
    Rbar = frozenset(v for v in range(1, diagram.n + 1) if ends[v] == 2)
    K = frozenset(range(1, diagram.n + 1)) - R - Rbar
    return Classification(R, Rbar, K)


def all_cyclic_perms(n: int) -> Iterator[CyclicPerm]:
    """All (n-1)! cyclic permutations of [n], in lexicographic order."""
    if n < 3:
        raise TooSmall(f"need at least 3 vertices, got {n}")
    for rest in itertools.permutations(range(2, n + 1)):
        yield CyclicPerm((1,) + rest)
