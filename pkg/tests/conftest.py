"""Shared helpers: independent oracles and random inputs for the tests.

The helpers here deliberately avoid the library's own code paths where
they serve as cross-checks: ``value_class_word`` classifies vertices by
comparing entries with their cyclic neighbours instead of reading the arc
set, and ``crossing_brute_force`` scans every arc subset.
"""

import random

from arcdiagrams import BDiagram


def value_class_word(seq):
    """Word of a cyclic sequence via neighbour comparisons (independent route)."""
    n = len(seq)
    letter = {}
    for i, v in enumerate(seq):
        prev, nxt = seq[i - 1], seq[(i + 1) % n]
        if v < prev and v < nxt:
            letter[v] = "r"
        elif v > prev and v > nxt:
            letter[v] = "R"
        else:
            letter[v] = "k"
    return "".join(letter[v] for v in range(1, n + 1))


def crossing_brute_force(b):
    """Largest mutually-crossing arc family by scanning all subsets."""
    import itertools

    arcs = sorted(b.arcs())
    best = 1 if arcs else 0
    for size in range(2, len(arcs) + 1):
        for subset in itertools.combinations(arcs, size):
            starts = [i for i, _ in subset]
            ends = [j for _, j in subset]
            if (
                all(a < b_ for a, b_ in zip(starts, starts[1:]))
                and all(a < b_ for a, b_ in zip(ends, ends[1:]))
                and starts[-1] < ends[0]
            ):
                best = max(best, size)
    return best


def random_bdiagram(rng: random.Random, n: int) -> BDiagram:
    """Uniform-ish random diagram: shuffled labels cut into m >= 2 blocks."""
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    m = rng.randint(2, n)
    cuts = sorted(rng.sample(range(1, n), m - 1))
    blocks = []
    prev = 0
    for cut in cuts + [n]:
        blocks.append(tuple(labels[prev:cut]))
        prev = cut
    return BDiagram(tuple(blocks))
