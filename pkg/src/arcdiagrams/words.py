"""Letter encodings of arc diagrams and their lattice paths.

Cycle diagrams use the three-letter alphabet ``r`` / ``R`` / ``k`` (left
ramphoid, right ramphoid, keratoid; ``R`` is ASCII for the barred letter).
Block diagrams add ``a`` / ``A`` for vertices that begin or end a single
arc and ``e`` for isolated vertices, giving six letters in total.

Words draw as paths of unit steps.  There are two dialects:

- ``cycle``: one step per letter (r up, R down, k flat), so a word is a
  Motzkin path, or a Dyck path when it has no ``k``;
- ``block``: r and R become double up / down steps and k a valley (one
  step down, one up), while a / A / e stay single, so a letter may span
  two steps and the path length is the word length plus the number of
  r, R and k letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from .errors import AlphabetMismatch, HasKeratoids, LengthMismatch, NotAWord
from .perm import Classification, CyclicPerm, arc_set, classify

CYCLE_ALPHABET = "rRk"
BLOCK_ALPHABET = "aAekrR"

#: Net change in open-arc count contributed by each letter.
DEGREES = {"R": -2, "A": -1, "e": 0, "k": 0, "a": 1, "r": 2}

_CYCLE_STEPS = {"r": (1,), "R": (-1,), "k": (0,)}
_BLOCK_STEPS = {
    "a": (1,),
    "A": (-1,),
    "e": (0,),
    "r": (1, 1),
    "R": (-1, -1),
    "k": (-1, 1),
}
_STEP_TABLES = {"cycle": _CYCLE_STEPS, "block": _BLOCK_STEPS}

_INFLATE = {"a": "a", "A": "A", "e": "e", "r": "aa", "R": "AA", "k": "Aa"}


def _check_letters(word: str, alphabet: str) -> None:
    if not word:
        raise AlphabetMismatch("empty word")
    bad = set(word) - set(alphabet)
    if bad:
        raise AlphabetMismatch(
            f"letters {sorted(bad)} not in alphabet {alphabet!r}"
        )


def word_of_classes(cls: Classification) -> str:
    """Letter per vertex in natural order: r, R or k by class."""
    return "".join(
        "r" if v in cls.R else "R" if v in cls.Rbar else "k"
        for v in range(1, cls.n + 1)
    )


def cycle_word(p: CyclicPerm) -> str:
    """Letter-per-vertex encoding of the arc diagram of ``p``.

    Position i carries the class of vertex i in natural order (not the
    order the cycle visits them).  A permutation and its reverse share one
    diagram, hence one word.

    >>> cycle_word(CyclicPerm((1, 3, 2, 7, 8, 4, 5, 6)))
    'rrRrkRkR'
    """
    return word_of_classes(classify(arc_set(p)))


@dataclass(frozen=True)
class WordPredicates:
    is_motzkin: bool
    is_dyck: bool
    is_elevated: bool


def word_predicates(word: str) -> WordPredicates:
    """Motzkin / Dyck / elevated tests for a word over ``rRk``.

    Motzkin: equally many r and R, and no prefix has more R than r.
    Dyck: Motzkin with no flat letters.  Elevated: every proper nonempty
    prefix has strictly more r than R, i.e. the path only touches the
    axis at its endpoints.
    """
    _check_letters(word, CYCLE_ALPHABET)
    heights = list(accumulate(_CYCLE_STEPS[c][0] for c in word))
    is_motzkin = heights[-1] == 0 and min(heights) >= 0
    is_elevated = all(h > 0 for h in heights[:-1])
    return WordPredicates(is_motzkin, is_motzkin and "k" not in word, is_elevated)


def check_cycle_word(word: str) -> None:
    """Raise :class:`NotAWord` unless ``word`` could encode a cycle diagram.

    Requires the rRk alphabet, r/R at the two ends with no R in second
    place and no r in second-to-last place, balance, and an elevated
    Motzkin path.
    """
    try:
        _check_letters(word, CYCLE_ALPHABET)
    except AlphabetMismatch as exc:
        raise NotAWord(str(exc)) from exc
    if word[0] != "r" or word[-1] != "R":
        raise NotAWord("word must start with r and end with R")
    if word[1] == "R" or word[-2] == "r":
        raise NotAWord("second letter R or second-to-last letter r is impossible")
    preds = word_predicates(word)
    if not preds.is_motzkin:
        raise NotAWord("word is not balanced with nonnegative prefixes")
    if not preds.is_elevated:
        raise NotAWord("path touches the axis before the final letter")


def reindex_word(word: str, p: CyclicPerm) -> str:
    """Reorder ``word`` so position i shows the letter of vertex ``p[i]``.

    The round trip is ``word[i] == reindex_word(word, p)[pos(i)]`` where
    pos is the inverse permutation.
    """
    if len(word) != p.n:
        raise LengthMismatch(f"word length {len(word)} != n {p.n}")
    return "".join(word[v - 1] for v in p.seq)


def dyck_parity_word(p: CyclicPerm) -> str:
    """Dyck word of a keratoid-free permutation, read off position parity.

    Vertex i gets ``r`` exactly when its position in the sequence is odd.
    Equals :func:`cycle_word` whenever the latter has no ``k``.
    """
    if classify(arc_set(p)).K:
        raise HasKeratoids(f"{p} has keratoid vertices")
    return "".join(
        "r" if p.position_of(v) % 2 == 1 else "R" for v in range(1, p.n + 1)
    )


def degree_vector(word: str) -> tuple[int, ...]:
    """Per-letter net change in open arcs: R -2, A -1, e/k 0, a +1, r +2.

    No validity judgement is made.

    >>> degree_vector("rarARAA")
    (2, 1, 2, -1, -2, -1, -1)
    """
    _check_letters(word, BLOCK_ALPHABET)
    return tuple(DEGREES[c] for c in word)


@dataclass(frozen=True)
class StepPath:
    """A lattice path as unit steps, each +1 (up), -1 (down) or 0 (flat)."""

    steps: tuple[int, ...]

    @property
    def heights(self) -> tuple[int, ...]:
        """Height after each step, starting from 0."""
        return tuple(accumulate(self.steps))

    def __len__(self) -> int:
        return len(self.steps)


def step_groups(word: str, dialect: str) -> tuple[tuple[int, ...], ...]:
    """Unit steps contributed by each letter, one group per letter."""
    if dialect not in _STEP_TABLES:
        raise ValueError(f"unknown dialect {dialect!r}, use 'cycle' or 'block'")
    table = _STEP_TABLES[dialect]
    _check_letters(word, "".join(table))
    return tuple(table[c] for c in word)


def path_steps(word: str, dialect: str) -> StepPath:
    """Path of ``word`` in the given dialect (``cycle`` or ``block``).

    In the block dialect the step count is the word length plus the
    number of r, R and k letters.
    """
    return StepPath(tuple(s for group in step_groups(word, dialect) for s in group))


def inflate(word: str) -> str:
    """Expand a six-letter word to single-step letters over ``a``/``A``/``e``.

    r becomes aa, R becomes AA, k becomes Aa; the others are unchanged.
    The block path of the input equals the block path of the output, so
    the output length is the input's block step count.

    >>> inflate("arAkAA")
    'aaaAAaAA'
    """
    _check_letters(word, BLOCK_ALPHABET)
    return "".join(_INFLATE[c] for c in word)


@lru_cache(maxsize=None)
def motzkin_number(k: int) -> int:
    """k-th Motzkin number by the convolution recurrence (M0 = M1 = 1)."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k <= 1:
        return 1
    return motzkin_number(k - 1) + sum(
        motzkin_number(i) * motzkin_number(k - 2 - i) for i in range(k - 1)
    )


@lru_cache(maxsize=None)
def catalan_number(k: int) -> int:
    """k-th Catalan number by the convolution recurrence (C0 = 1)."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k == 0:
        return 1
    return sum(catalan_number(i) * catalan_number(k - 1 - i) for i in range(k))
