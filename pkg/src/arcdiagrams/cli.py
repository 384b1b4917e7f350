"""Command-line front end, path rendering, and the census harness.

Exit codes: 0 success, 1 unparseable input, 2 domain rule violated,
3 size guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bdiagram import (
    add_arc,
    block_word,
    complement,
    cut_set,
    max_crossing,
    parse_bdiagram,
    remove_arc,
    transpose_labels,
    validate_block_word,
)
from .errors import DiagramError, TooLarge, TooSmall
from .generation import (
    DEFAULT_CAP,
    complete_table,
    count_generators,
    enumerate_generators,
    generators_oracle,
)
from .inversion import canonical_half, perms_from_word, perms_from_word_oracle
from .perm import all_cyclic_perms, arc_set, arc_text, classify, parse_perm
from .words import (
    catalan_number,
    check_cycle_word,
    cycle_word,
    degree_vector,
    inflate,
    motzkin_number,
    step_groups,
    word_of_classes,
)

CENSUS_MAX_N = 10


# ---------------------------------------------------------------- rendering

def render_ascii(word: str, dialect: str) -> str:
    """Draw the path of ``word`` with ``/``, ``\\`` and ``_`` characters.

    One text column per unit step; vertex indices are printed under the
    first column of each letter's step group.
    """
    groups = step_groups(word, dialect)
    cells = []  # (band, column, char)
    height = 0
    col = 0
    for group in groups:
        for dy in group:
            if dy == 1:
                cells.append((height, col, "/"))
                height += 1
            elif dy == -1:
                height -= 1
                cells.append((height, col, "\\"))
            else:
                cells.append((height, col, "_"))
            col += 1
    top = max(band for band, _, _ in cells)
    bottom = min(band for band, _, _ in cells)
    width = col
    rows = []
    for band in range(top, bottom - 1, -1):
        line = [" "] * width
        for b, c, ch in cells:
            if b == band:
                line[c] = ch
        rows.append("".join(line).rstrip())
    labels = [" "] * width
    col = 0
    for index, group in enumerate(groups, start=1):
        text = str(index)
        if col + len(text) <= width and all(
            labels[col + t] == " " for t in range(len(text))
        ):
            for t, ch in enumerate(text):
                labels[col + t] = ch
        col += len(group)
    rows.append("".join(labels).rstrip())
    return "\n".join(rows)


def render_svg(word: str, dialect: str) -> str:
    """The same path as a minimal SVG polyline with vertex labels."""
    unit, pad, label_space = 20, 10, 16
    groups = step_groups(word, dialect)
    steps = [dy for group in groups for dy in group]
    heights = [0]
    for dy in steps:
        heights.append(heights[-1] + dy)
    top, bottom = max(heights), min(heights)
    width = pad * 2 + unit * len(steps)
    height = pad * 2 + unit * (top - bottom) + label_space

    def x(col: int) -> int:
        return pad + unit * col

    def y(h: int) -> int:
        return pad + unit * (top - h)

    points = " ".join(f"{x(i)},{y(h)}" for i, h in enumerate(heights))
    labels = []
    col = 0
    for index, group in enumerate(groups, start=1):
        cx = x(col) + unit * len(group) // 2
        labels.append(
            f'<text x="{cx}" y="{height - 4}" font-size="10" '
            f'text-anchor="middle">{index}</text>'
        )
        col += len(group)
    body = "\n".join(
        [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">',
            f'<polyline fill="none" stroke="black" points="{points}"/>',
            *labels,
            "</svg>",
        ]
    )
    return body


# ------------------------------------------------------------------- census

@dataclass(frozen=True)
class SplitException:
    """A word whose permutations defy the split by smallest non-r second entry."""

    word: str
    expected_second: int
    count: int
    example: str


@dataclass(frozen=True)
class CensusReport:
    n: int
    perm_count: int
    word_count: int
    motzkin_expected: int
    dyck_count: int
    dyck_expected: int
    split_exceptions: tuple[SplitException, ...]

    @property
    def words_pass(self) -> bool:
        return self.word_count == self.motzkin_expected

    @property
    def dyck_pass(self) -> bool:
        return self.dyck_count == self.dyck_expected


def census_report(n: int) -> CensusReport:
    """Exhaustively check the word counts over all cyclic permutations of [n].

    Confirms that the number of distinct words matches the Motzkin
    recurrence and the keratoid-free count the Catalan recurrence, and
    lists the words whose permutation sets do not split into "second entry
    equals the smallest non-left-ramphoid vertex" plus reversals.
    """
    if n < 3:
        raise TooSmall(f"census needs n >= 3, got {n}")
    if n > CENSUS_MAX_N:
        raise TooLarge(f"census refuses n={n} > {CENSUS_MAX_N}")
    groups: dict[str, list[tuple[int, ...]]] = {}
    count = 0
    for p in all_cyclic_perms(n):
        count += 1
        groups.setdefault(cycle_word(p), []).append(p.seq)
    exceptions = []
    for word in sorted(groups):
        expected_second = min(
            i + 1 for i, c in enumerate(word) if c in "Rk"
        )
        # the reverse of seq has second entry seq[-1]
        bad = [
            seq
            for seq in groups[word]
            if seq[1] != expected_second and seq[-1] != expected_second
        ]
        if bad:
            exceptions.append(
                SplitException(
                    word=word,
                    expected_second=expected_second,
                    count=len(bad),
                    example=" ".join(str(v) for v in min(bad)),
                )
            )
    dyck_expected = catalan_number((n - 2) // 2) if n % 2 == 0 else 0
    return CensusReport(
        n=n,
        perm_count=count,
        word_count=len(groups),
        motzkin_expected=motzkin_number(n - 2),
        dyck_count=sum(1 for w in groups if "k" not in w),
        dyck_expected=dyck_expected,
        split_exceptions=tuple(exceptions),
    )


def census_lines(report: CensusReport) -> list[str]:
    lines = [
        f"n={report.n} cyclic permutations={report.perm_count}",
        f"distinct words: {report.word_count} expected {report.motzkin_expected}"
        f" -> {'PASS' if report.words_pass else 'FAIL'}",
        f"dyck words: {report.dyck_count} expected {report.dyck_expected}"
        f" -> {'PASS' if report.dyck_pass else 'FAIL'}",
        f"second-entry split exceptions: {len(report.split_exceptions)} words",
    ]
    for exc in report.split_exceptions:
        lines.append(
            f"  {exc.word}: expected second entry {exc.expected_second}, "
            f"{exc.count} permutations in neither half (e.g. {exc.example})"
        )
    return lines


# ----------------------------------------------------------------- commands

def _emit(args, payload: dict, lines: list[str]) -> int:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_classify(args) -> int:
    p = parse_perm(args.perm)
    cls = classify(arc_set(p))
    word = word_of_classes(cls)
    payload = {
        "R": sorted(cls.R),
        "Rbar": sorted(cls.Rbar),
        "K": sorted(cls.K),
        "word": word,
    }
    lines = [
        "R: " + " ".join(str(v) for v in sorted(cls.R)),
        "Rbar: " + " ".join(str(v) for v in sorted(cls.Rbar)),
        "K: " + " ".join(str(v) for v in sorted(cls.K)),
        "word: " + word,
    ]
    return _emit(args, payload, lines)


def _cmd_invert(args) -> int:
    # run the oracle first so its size guard fires before the search starts
    oracle = perms_from_word_oracle(args.word) if args.oracle else None
    perms = perms_from_word(args.word)
    shown = canonical_half(perms) if args.canonical_half else perms
    payload = {"word": args.word, "perms": [list(p.seq) for p in shown]}
    lines = [str(p) for p in shown]
    if oracle is not None:
        status = "MATCH" if oracle == perms else "MISMATCH"
        payload["oracle"] = status
        lines.append(f"oracle: {status}")
    return _emit(args, payload, lines)


def _cmd_bword(args) -> int:
    b = parse_bdiagram(args.bdiagram)
    word = block_word(b)
    payload = {
        "word": word,
        "arcs": b.arc_notation(),
        "blocks": [list(block) for block in b.blocks],
    }
    return _emit(args, payload, ["word: " + word, "arcs: " + b.arc_notation()])


def _cmd_validate_word(args) -> int:
    result = validate_block_word(args.word)
    if result.ok:
        payload = {"valid": True, "witness": str(result.witness)}
        lines = ["Valid", f"witness: {result.witness}"]
    else:
        payload = {"valid": False, "reason": result.reason.value}
        lines = [f"Invalid: {result.reason.value}"]
    return _emit(args, payload, lines)


def _cmd_generators(args) -> int:
    b = parse_bdiagram(args.bdiagram)
    if not args.list:
        count = count_generators(b)
        return _emit(args, {"count": count}, [str(count)])
    methods = {
        "blocks": lambda: enumerate_generators(b, args.cap),
        "table": lambda: complete_table(b, args.cap),
        "oracle": lambda: generators_oracle(b),
    }
    perms = methods[args.method]()
    payload = {
        "count": len(perms),
        "method": args.method,
        "perms": [list(p.seq) for p in perms],
    }
    return _emit(args, payload, [str(p) for p in perms])


def _cmd_cutset(args) -> int:
    cut = cut_set(parse_perm(args.perm), parse_bdiagram(args.bdiagram))
    payload = {"arcs": [list(a) for a in sorted(cut)], "size": len(cut)}
    return _emit(args, payload, [arc_text(cut)])


def _cmd_complement(args) -> int:
    result = complement(parse_perm(args.perm), parse_bdiagram(args.bdiagram))
    payload = {"blocks": [list(block) for block in result.blocks]}
    return _emit(args, payload, [str(result)])


def _cmd_crossing(args) -> int:
    value = max_crossing(parse_bdiagram(args.bdiagram))
    return _emit(args, {"max_crossing": value}, [str(value)])


def _cmd_inflate(args) -> int:
    word = inflate(args.word)
    return _emit(args, {"word": word}, [word])


def _cmd_edit(args) -> int:
    b = parse_bdiagram(args.bdiagram)
    if args.op == "add":
        result = add_arc(b, (args.i, args.j))
    elif args.op == "remove":
        result = remove_arc(b, (args.i, args.j))
    else:
        result = transpose_labels(b, args.i, args.j)
    payload = {"blocks": [list(block) for block in result.blocks]}
    return _emit(args, payload, [str(result)])


def _cmd_render(args) -> int:
    if args.kind == "perm":
        word = cycle_word(parse_perm(args.input))
        dialect = "cycle"
    elif args.kind == "word":
        check_cycle_word(args.input)
        word = args.input
        dialect = "cycle"
    else:
        degree_vector(args.input)  # alphabet check only
        word = args.input
        dialect = "block"
    art = render_svg(word, dialect) if args.format == "svg" else render_ascii(word, dialect)
    payload = {"kind": args.kind, "word": word, "art": art}
    return _emit(args, payload, [art])


def _cmd_census(args) -> int:
    report = census_report(args.n)
    payload = {
        "n": report.n,
        "permutations": report.perm_count,
        "words": {
            "count": report.word_count,
            "expected": report.motzkin_expected,
            "pass": report.words_pass,
        },
        "dyck_words": {
            "count": report.dyck_count,
            "expected": report.dyck_expected,
            "pass": report.dyck_pass,
        },
        "split_exceptions": [
            {
                "word": e.word,
                "expected_second": e.expected_second,
                "count": e.count,
                "example": e.example,
            }
            for e in report.split_exceptions
        ],
    }
    return _emit(args, payload, census_lines(report))


# ------------------------------------------------------------------ parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcdiagrams",
        description="Arc diagrams of cyclic permutations and acyclic block diagrams.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        help="refuse enumerations larger than this",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="vertex classes and word")
    s.add_argument("perm")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("invert", parents=[common], help="permutations of a word")
    s.add_argument("word")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="list every permutation (default)")
    group.add_argument(
        "--canonical-half",
        action="store_true",
        help="one permutation per reversal pair",
    )
    s.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    s.set_defaults(func=_cmd_invert)

    s = sub.add_parser("bword", parents=[common], help="word of a block diagram")
    s.add_argument("bdiagram")
    s.set_defaults(func=_cmd_bword)

    s = sub.add_parser(
        "validate-word", parents=[common], help="does a six-letter word have a diagram"
    )
    s.add_argument("word")
    s.set_defaults(func=_cmd_validate_word)

    s = sub.add_parser("generators", parents=[common], help="generators of a diagram")
    s.add_argument("bdiagram")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print the count (default)")
    group.add_argument("--list", action="store_true", help="list the generators")
    s.add_argument(
        "--method",
        choices=("blocks", "table", "oracle"),
        default="blocks",
        help="how to enumerate when listing",
    )
    s.set_defaults(func=_cmd_generators)

    s = sub.add_parser("cutset", parents=[common], help="arcs removed by a generator")
    s.add_argument("perm")
    s.add_argument("bdiagram")
    s.set_defaults(func=_cmd_cutset)

    s = sub.add_parser("complement", parents=[common], help="complement of a diagram")
    s.add_argument("perm")
    s.add_argument("bdiagram")
    s.set_defaults(func=_cmd_complement)

    s = sub.add_parser("crossing", parents=[common], help="largest crossing family")
    s.add_argument("bdiagram")
    s.set_defaults(func=_cmd_crossing)

    s = sub.add_parser("inflate", parents=[common], help="expand to single-step letters")
    s.add_argument("word")
    s.set_defaults(func=_cmd_inflate)

    s = sub.add_parser("edit", parents=[common], help="add/remove an arc or swap labels")
    s.add_argument("op", choices=("add", "remove", "transpose"))
    s.add_argument("bdiagram")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(func=_cmd_edit)

    s = sub.add_parser("render", parents=[common], help="draw a word's path")
    s.add_argument("input")
    s.add_argument("--kind", choices=("perm", "word", "bword"), default="word")
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.set_defaults(func=_cmd_render)

    s = sub.add_parser("census", parents=[common], help="verify word counts for one n")
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
