"""Acyclic arc diagrams built from vertex-disjoint blocks (b-diagrams).

A b-diagram on [n] is an ordered list of blocks whose concatenation is a
permutation of [n].  A block of length one is an isolated vertex; a longer
block is a path, contributing an arc for every pair of adjacent entries.
No block may contain all n vertices.  Since blocks are vertex-disjoint the
arc graph is automatically a disjoint union of paths: every vertex meets
at most two arcs and there are no cycles.

Six vertex classes replace the three of the cycle case: r / R / k keep
their meanings (two arcs open, two close, one of each), ``a`` opens a
single arc, ``A`` closes a single arc, and ``e`` is isolated.  The word of
a diagram lists the class letter of each vertex in natural order.

Deleting arcs from the diagram of a cyclic permutation leaves a b-diagram;
the deleted arcs are its cut set with respect to that permutation, and the
cut set of a second diagram, the complement, swaps the two roles.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import (
    AlreadyPresent,
    BlockTooLong,
    DegreeExceeded,
    EmptyBlock,
    NotAGenerator,
    NotAPermutation,
    NotPresent,
    NotRepresentable,
    OutOfRange,
    WouldCycle,
)
from .perm import Arc, CyclicPerm, arc_set, arc_text
from .words import degree_vector, path_steps

_CLASS_LETTER = {
    (2, 0): "r",
    (0, 2): "R",
    (1, 1): "k",
    (1, 0): "a",
    (0, 1): "A",
    (0, 0): "e",
}


@dataclass(frozen=True)
class BDiagram:
    """Ordered blocks over [n]; equality is positional, see :meth:`normalized`."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.blocks or any(not b for b in self.blocks):
            raise EmptyBlock("blocks must be nonempty")
        flat = [v for block in self.blocks for v in block]
        n = len(flat)
        if set(flat) != set(range(1, n + 1)) or len(set(flat)) != n:
            raise NotAPermutation(f"blocks must partition 1..{n}: {self.blocks}")
        if any(len(b) == n for b in self.blocks):
            raise BlockTooLong(f"a block may hold at most {n - 1} of the {n} vertices")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def singleton_count(self) -> int:
        return sum(1 for b in self.blocks if len(b) == 1)

    def arcs(self) -> frozenset[Arc]:
        """One arc per adjacent pair inside a block, smaller endpoint first."""
        return frozenset(
            (min(x, y), max(x, y))
            for block in self.blocks
            for x, y in zip(block, block[1:])
        )

    def isolated(self) -> frozenset[int]:
        return frozenset(b[0] for b in self.blocks if len(b) == 1)

    def normalized(self) -> BDiagram:
        """Canonical form: blocks oriented small end first, sorted by minimum."""
        oriented = [
            b if len(b) == 1 or b[0] < b[-1] else b[::-1] for b in self.blocks
        ]
        return BDiagram(tuple(sorted(oriented, key=min)))

    def arc_notation(self) -> str:
        """Brace notation with isolated vertices listed bare, e.g. ``{13,2,48,56,7}``."""
        return arc_text(self.arcs(), self.isolated())

    def __str__(self) -> str:
        return " | ".join(" ".join(str(v) for v in b) for b in self.blocks)


def parse_bdiagram(text: str) -> BDiagram:
    """Parse blocks separated by ``|``, e.g. ``"3 1 6 | 2 7 8 | 4 5"``."""
    blocks = []
    for segment in text.split("|"):
        tokens = segment.split()
        if not tokens:
            raise EmptyBlock(f"empty block in {text!r}")
        try:
            blocks.append(tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise NotAPermutation(f"non-integer entry in {text!r}") from exc
    return BDiagram(tuple(blocks))


@dataclass(frozen=True)
class BClassification:
    """The six vertex classes of a b-diagram."""

    R: frozenset[int]
    Rbar: frozenset[int]
    K: frozenset[int]
    A: frozenset[int]
    Abar: frozenset[int]
    L: frozenset[int]


def classify_bdiagram(b: BDiagram) -> BClassification:
    """Split vertices by how many arcs open and close at each."""
    opens = Counter(i for i, _ in b.arcs())
    closes = Counter(j for _, j in b.arcs())
    groups: dict[str, set[int]] = {letter: set() for letter in "rRkaAe"}
    for v in range(1, b.n + 1):
        groups[_CLASS_LETTER[opens[v], closes[v]]].add(v)
    return BClassification(
        R=frozenset(groups["r"]),
        Rbar=frozenset(groups["R"]),
        K=frozenset(groups["k"]),
        A=frozenset(groups["a"]),
        Abar=frozenset(groups["A"]),
        L=frozenset(groups["e"]),
    )


def block_word(b: BDiagram) -> str:
    """Class letter of each vertex in natural order.

    >>> block_word(parse_bdiagram("3 1 6 | 2 7 8 | 4 5"))
    'raAaAAkA'
    """
    opens = Counter(i for i, _ in b.arcs())
    closes = Counter(j for _, j in b.arcs())
    return "".join(_CLASS_LETTER[opens[v], closes[v]] for v in range(1, b.n + 1))


class InvalidReason(Enum):
    NEGATIVE_PREFIX = "NegativePrefix"
    NONZERO_TOTAL = "NonzeroTotal"
    BAD_ENDPOINTS = "BadEndpoints"
    UNREALIZABLE = "Unrealizable"


@dataclass(frozen=True)
class WordCheck:
    """Outcome of :func:`validate_block_word`: a witness or a reason."""

    ok: bool
    witness: BDiagram | None = None
    reason: InvalidReason | None = None


def validate_block_word(word: str) -> WordCheck:
    """Decide whether a six-letter word is the word of some b-diagram.

    The degree test (no negative prefix sum, zero total) is necessary but
    not sufficient: ``rkR`` passes it yet would force three arcs on three
    vertices, a cycle.  After the degree, endpoint and step-path screens a
    small backtracking search settles realizability and produces a
    canonical witness.
    """
    degrees = degree_vector(word)
    running = 0
    for value in degrees[:-1]:
        running += value
        if running < 0:
            return WordCheck(False, reason=InvalidReason.NEGATIVE_PREFIX)
    if sum(degrees) != 0:
        return WordCheck(False, reason=InvalidReason.NONZERO_TOTAL)
    if word[0] in "ARk" or word[-1] in "ark":
        return WordCheck(False, reason=InvalidReason.BAD_ENDPOINTS)
    # a k letter needs an open arc to land on: the unit-step path must not dip
    if min(path_steps(word, "block").heights) < 0:
        return WordCheck(False, reason=InvalidReason.NEGATIVE_PREFIX)
    witness = _realize(word)
    if witness is None:
        return WordCheck(False, reason=InvalidReason.UNREALIZABLE)
    return WordCheck(True, witness=witness)


def _realize(word: str) -> BDiagram | None:
    """First b-diagram realizing ``word`` under an ordered search, or None.

    Scans vertices left to right; at each vertex the arcs ending there are
    matched to open starts, smallest candidates first, skipping matches
    that would duplicate a vertex pair or close a cycle.
    """
    n = len(word)
    opens = {"r": 2, "a": 1, "k": 1}
    closes = {"R": 2, "A": 1, "k": 1}
    start_slots = [0] + [opens.get(c, 0) for c in word]
    end_slots = [0] + [closes.get(c, 0) for c in word]
    if sum(start_slots) >= n - 1:
        # n-1 arcs would be one block of all n vertices; n arcs a cycle
        return None

    arcs: list[Arc] = []

    def place(v: int, open_count: dict[int, int], comp: dict[int, int]) -> bool:
        if v > n:
            return True
        pool = sorted(u for u in range(1, v) if open_count[u] > 0)
        for chosen in itertools.combinations(pool, end_slots[v]):
            roots = [comp[u] for u in chosen]
            if len(set(roots)) != len(roots) or comp[v] in roots:
                continue  # duplicate pair or cycle
            next_open = dict(open_count)
            next_comp = dict(comp)
            for u in chosen:
                next_open[u] -= 1
                src = next_comp[u]
                for w in range(1, n + 1):
                    if next_comp[w] == src:
                        next_comp[w] = next_comp[v]
                arcs.append((u, v))
            next_open[v] = start_slots[v]
            if place(v + 1, next_open, next_comp):
                return True
            for _ in chosen:
                arcs.pop()
        return False

    found = place(1, {v: 0 for v in range(1, n + 1)}, {v: v for v in range(1, n + 1)})
    if not found:
        return None
    return _blocks_from_arcs(n, frozenset(arcs))


def _blocks_from_arcs(n: int, arcs: frozenset[Arc]) -> BDiagram:
    """Assemble blocks (paths and singletons) from an arc set.

    Raises :class:`NotRepresentable` when the arcs contain a cycle or a
    single path swallows all n vertices.
    """
    neighbours: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in arcs:
        neighbours[i].append(j)
        neighbours[j].append(i)
    if any(len(vs) > 2 for vs in neighbours.values()):
        raise NotRepresentable("a vertex would meet more than two arcs")
    seen = set()
    blocks = []
    for v in range(1, n + 1):
        if v in seen:
            continue
        if not neighbours[v]:
            seen.add(v)
            blocks.append((v,))
            continue
        # walk to one end of the path containing v, then traverse it
        end = v
        prev = None
        steps = 0
        while True:
            nxts = [u for u in neighbours[end] if u != prev]
            if not nxts:
                break
            prev, end = end, nxts[0]
            steps += 1
            if steps > n:
                raise NotRepresentable("arcs contain a cycle")
        path = [end]
        seen.add(end)
        prev = None
        while True:
            nxts = [u for u in neighbours[path[-1]] if u != prev]
            if not nxts:
                break
            prev = path[-1]
            path.append(nxts[0])
            seen.add(nxts[0])
        if len(path) == n:
            raise NotRepresentable("the arcs form a single path of all vertices")
        blocks.append(tuple(path) if path[0] < path[-1] else tuple(reversed(path)))
    return BDiagram(tuple(sorted(blocks, key=min)))


def cut_set(p: CyclicPerm, b: BDiagram) -> frozenset[Arc]:
    """Arcs of ``p``'s diagram that are missing from ``b``.

    Requires ``b``'s arcs to sit inside the diagram of ``p`` (i.e. ``p``
    generates ``b``); the difference then has exactly one arc per block.
    """
    if p.n != b.n:
        raise NotAGenerator(f"vertex counts differ: {p.n} vs {b.n}")
    sigma_arcs = arc_set(p).arcs
    block_arcs = b.arcs()
    if not block_arcs <= sigma_arcs:
        raise NotAGenerator(f"{p} does not generate {b}")
    return frozenset(sigma_arcs - block_arcs)


def complement(p: CyclicPerm, b: BDiagram) -> BDiagram:
    """The b-diagram whose arcs are the cut set of ``b`` in ``p``.

    Vertices untouched by the cut set become isolated.  Complementing
    twice returns ``b`` up to normalization.  Degenerate cases (the cut
    set forms a cycle, or one path through every vertex) are rejected.
    """
    return _blocks_from_arcs(p.n, cut_set(p, b))


def max_crossing(b: BDiagram) -> int:
    """Largest k such that some k arcs mutually cross.

    Arcs (i1,j1) .. (ik,jk) mutually cross when i1 < .. < ik < j1 < .. < jk.
    Returns 0 with no arcs and 1 when arcs exist but none cross; the
    diagram is then m-noncrossing for every m exceeding the result.
    """
    arcs = sorted(b.arcs())
    if not arcs:
        return 0
    best = 1
    for boundary in range(1, b.n):
        spanning = [(i, j) for i, j in arcs if i <= boundary < j]
        # longest chain with strictly increasing starts and ends
        lengths = []
        for t, (i, j) in enumerate(spanning):
            prior = [
                lengths[s]
                for s in range(t)
                if spanning[s][0] < i and spanning[s][1] < j
            ]
            lengths.append(1 + max(prior, default=0))
        best = max(best, max(lengths, default=1))
    return best


def _degree(b: BDiagram, v: int) -> int:
    return sum(1 for i, j in b.arcs() if v in (i, j))


def add_arc(b: BDiagram, arc: Arc) -> BDiagram:
    """Join two blocks (or absorb an isolated vertex) with a new arc.

    Both endpoints must currently meet at most one arc, the arc must be
    new, and its endpoints must lie in different blocks.  The merged block
    replaces the earlier of the two, oriented small end first.
    """
    x, y = arc
    if not (1 <= x <= b.n and 1 <= y <= b.n):
        raise OutOfRange(f"arc {arc} out of 1..{b.n}")
    if x == y:
        raise WouldCycle("an arc needs two distinct endpoints")
    lo, hi = min(x, y), max(x, y)
    if (lo, hi) in b.arcs():
        raise AlreadyPresent(f"arc ({lo}, {hi}) already present")
    if _degree(b, lo) > 1 or _degree(b, hi) > 1:
        raise DegreeExceeded("both endpoints must have at most one arc")
    where = {v: idx for idx, block in enumerate(b.blocks) for v in block}
    if where[lo] == where[hi]:
        raise WouldCycle(f"{lo} and {hi} already share a block")
    first, second = sorted((where[lo], where[hi]))
    if len(b.blocks[first]) + len(b.blocks[second]) == b.n:
        raise NotRepresentable("the merged block would hold every vertex")

    def ending_at(block: tuple[int, ...], v: int) -> tuple[int, ...]:
        return block if block[-1] == v else block[::-1]

    a_part = ending_at(b.blocks[where[x]], x)
    c_part = ending_at(b.blocks[where[y]], y)[::-1]
    merged = a_part + c_part
    if merged[0] > merged[-1]:
        merged = merged[::-1]
    blocks = [
        merged if idx == first else block
        for idx, block in enumerate(b.blocks)
        if idx != second
    ]
    return BDiagram(tuple(blocks))


def remove_arc(b: BDiagram, arc: Arc) -> BDiagram:
    """Split a block at an arc; the two pieces keep the block's position."""
    lo, hi = min(arc), max(arc)
    for idx, block in enumerate(b.blocks):
        for t in range(len(block) - 1):
            if {block[t], block[t + 1]} == {lo, hi}:
                left, right = block[: t + 1], block[t + 1 :]
                pieces = [
                    p if len(p) == 1 or p[0] < p[-1] else p[::-1]
                    for p in (left, right)
                ]
                blocks = (
                    list(b.blocks[:idx]) + pieces + list(b.blocks[idx + 1 :])
                )
                return BDiagram(tuple(blocks))
    raise NotPresent(f"arc ({lo}, {hi}) not in the diagram")


def transpose_labels(b: BDiagram, i: int, j: int) -> BDiagram:
    """Swap the labels ``i`` and ``j`` everywhere; block shapes stay put."""
    if not (1 <= i <= b.n and 1 <= j <= b.n):
        raise OutOfRange(f"labels must lie in 1..{b.n}")
    swap = {i: j, j: i}
    return BDiagram(
        tuple(tuple(swap.get(v, v) for v in block) for block in b.blocks)
    )


def all_bdiagrams(n: int) -> Iterator[BDiagram]:
    """Every b-diagram on [n], normalized, in a deterministic order.

    Enumerates set partitions of [n] with no part of size n, then all
    path orderings of each part (orientation fixed small end first).
    """
    for parts in _set_partitions(list(range(1, n + 1))):
        if any(len(part) == n for part in parts):
            continue
        choices = []
        for part in sorted(parts, key=min):
            if len(part) == 1:
                choices.append([tuple(part)])
            else:
                choices.append(
                    [q for q in itertools.permutations(part) if q[0] < q[-1]]
                )
        for blocks in itertools.product(*choices):
            yield BDiagram(blocks)


def _set_partitions(elems: list[int]) -> Iterator[list[list[int]]]:
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part
