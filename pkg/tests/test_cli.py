import json

import pytest

from arcdiagrams import parse_bdiagram, parse_perm
from arcdiagrams.cli import main, render_ascii, render_svg

MOTZKIN_ART = """\
    _
 /\\/ \\_
/      \\
12345678"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "classify", "1 3 2 7 8 4 5 6")
        assert code == 0
        assert out.splitlines() == [
            "R: 1 2 4",
            "Rbar: 3 6 8",
            "K: 5 7",
            "word: rrRrkRkR",
        ]

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "classify", "--json", "1 3 2 7 8 4 5 6")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "R": [1, 2, 4],
            "Rbar": [3, 6, 8],
            "K": [5, 7],
            "word": "rrRrkRkR",
        }

    def test_tiny(self, capsys):
        code, out, _ = run(capsys, "classify", "1 2 3")
        assert code == 0 and "word: rkR" in out

    def test_parse_failure(self, capsys):
        code, _, err = run(capsys, "classify", "1 2 2 3")
        assert code == 1 and "error:" in err


class TestInvert:
    def test_fig6(self, capsys):
        code, out, _ = run(capsys, "invert", "rkrRkR")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 8 and lines[0] == "1 2 4 3 5 6"

    def test_fig7(self, capsys):
        code, out, _ = run(capsys, "invert", "rrRrRR")
        assert code == 0
        assert out.splitlines()[0] == "1 3 2 5 4 6" and len(out.splitlines()) == 4

    def test_canonical_half(self, capsys):
        code, out, _ = run(capsys, "invert", "--canonical-half", "rkrRkR")
        assert code == 0 and len(out.splitlines()) == 4

    def test_oracle_match(self, capsys):
        code, out, _ = run(capsys, "invert", "--oracle", "rkR")
        assert code == 0 and out.splitlines()[-1] == "oracle: MATCH"

    def test_bad_word(self, capsys):
        code, _, err = run(capsys, "invert", "rR")
        assert code == 1 and "error:" in err

    def test_oracle_cap(self, capsys):
        word = "r" + "r" * 5 + "k" + "R" * 5 + "R"  # length 13
        code, _, err = run(capsys, "invert", "--oracle", word)
        assert code == 3

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "invert", "--json", "rkR")
        payload = json.loads(out)
        rebuilt = [parse_perm(" ".join(map(str, seq))) for seq in payload["perms"]]
        assert [str(p) for p in rebuilt] == ["1 2 3", "1 3 2"]


class TestBWordAndValidate:
    def test_bword(self, capsys):
        code, out, _ = run(capsys, "bword", "1 3 | 2 | 4 8 | 5 6 | 7")
        assert code == 0
        assert out.splitlines() == ["word: aeAaaAeA", "arcs: {13,2,48,56,7}"]

    def test_validate_ok(self, capsys):
        code, out, _ = run(capsys, "validate-word", "rarARAA")
        assert code == 0
        assert out.splitlines() == ["Valid", "witness: 2 5 1 4 | 6 3 7"]

    def test_validate_invalid(self, capsys):
        code, out, _ = run(capsys, "validate-word", "RAkear")
        assert code == 0 and out.strip() == "Invalid: NegativePrefix"

    def test_validate_bad_letters(self, capsys):
        code, _, err = run(capsys, "validate-word", "xyz")
        assert code == 1


class TestGenerators:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "generators", "1 4 | 2 | 3 6 | 5 8 | 7")
        assert code == 0 and out.strip() == "192"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "generators", "--list", "1 2 3 | 4 7 8 | 5 6")
        assert code == 0 and len(out.splitlines()) == 16

    def test_methods_agree(self, capsys):
        outs = []
        for method in ("blocks", "table", "oracle"):
            code, out, _ = run(
                capsys, "generators", "--list", "--method", method, "2 3 1 4 | 5 8 7 6"
            )
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1] == outs[2]

    def test_cap(self, capsys):
        code, _, err = run(
            capsys, "generators", "--list", "--cap", "3", "1 2 3 | 4 7 8 | 5 6"
        )
        assert code == 3

    def test_tiny_count(self, capsys):
        code, out, _ = run(capsys, "generators", "--count", "1 2 | 3")
        assert code == 0 and out.strip() == "2"


class TestDiagramCommands:
    def test_cutset(self, capsys):
        code, out, _ = run(capsys, "cutset", "1 3 2 7 8 4 5 6", "3 1 6 | 2 7 8 | 4 5")
        assert code == 0 and out.strip() == "{23,48,56}"

    def test_cutset_not_generator(self, capsys):
        code, _, err = run(capsys, "cutset", "1 2 3 4", "2 4 | 1 | 3")
        assert code == 2 and "error:" in err

    def test_complement(self, capsys):
        code, out, _ = run(
            capsys, "complement", "1 2 3 8 7 5 4 6", "1 6 4 | 2 3 8 | 5 7"
        )
        assert code == 0 and out.strip() == "1 2 | 3 | 4 5 | 6 | 7 8"

    def test_complement_degenerate(self, capsys):
        code, _, err = run(capsys, "complement", "1 2 3", "1 2 | 3")
        assert code == 2

    def test_crossing(self, capsys):
        code, out, _ = run(capsys, "crossing", "1 2 | 3 6 | 4 7 | 5 8")
        assert code == 0 and out.strip() == "3"

    def test_inflate(self, capsys):
        code, out, _ = run(capsys, "inflate", "arAkAA")
        assert code == 0 and out.strip() == "aaaAAaAA"

    def test_edit_add(self, capsys):
        code, out, _ = run(capsys, "edit", "add", "1 2 | 3 | 4", "3", "4")
        assert code == 0 and out.strip() == "1 2 | 3 4"

    def test_edit_remove(self, capsys):
        code, out, _ = run(capsys, "edit", "remove", "2 1 3 4 | 5", "1", "3")
        assert code == 0 and out.strip() == "1 2 | 3 4 | 5"

    def test_edit_transpose(self, capsys):
        code, out, _ = run(capsys, "edit", "transpose", "1 2 | 3", "2", "3")
        assert code == 0 and out.strip() == "1 3 | 2"

    def test_edit_domain_error(self, capsys):
        code, _, err = run(capsys, "edit", "add", "1 2 | 3", "1", "2")
        assert code == 2


class TestRender:
    def test_ascii_golden(self, capsys):
        code, out, _ = run(capsys, "render", "--kind=word", "rrRrkRkR")
        assert code == 0 and out.rstrip("\n") == MOTZKIN_ART

    def test_ascii_direct(self):
        assert render_ascii("rrRrkRkR", "cycle") == MOTZKIN_ART

    def test_perm_kind_matches_word_kind(self, capsys):
        _, from_perm, _ = run(capsys, "render", "--kind=perm", "1 3 2 7 8 4 5 6")
        _, from_word, _ = run(capsys, "render", "--kind=word", "rrRrkRkR")
        assert from_perm == from_word

    def test_bword(self, capsys):
        code, out, _ = run(capsys, "render", "--kind=bword", "arAkAA")
        assert code == 0
        assert out.splitlines()[-1] == "12 34 56"

    def test_invalid_word(self, capsys):
        code, _, err = run(capsys, "render", "--kind=word", "rR")
        assert code == 1

    def test_svg(self):
        svg = render_svg("arAkAA", "block")
        assert svg.startswith("<svg") and "<polyline" in svg
        assert svg.count("<text") == 6

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "render", "--kind=bword", "--format=svg", "arAkAA")
        _, second, _ = run(capsys, "render", "--kind=bword", "--format=svg", "arAkAA")
        assert first == second


class TestCensus:
    def test_n6(self, capsys):
        code, out, _ = run(capsys, "census", "6")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n=6 cyclic permutations=120"
        assert lines[1] == "distinct words: 9 expected 9 -> PASS"
        assert lines[2] == "dyck words: 2 expected 2 -> PASS"
        assert any(line.strip().startswith("rrkkRR:") for line in lines)

    def test_n4_json(self, capsys):
        code, out, _ = run(capsys, "census", "--json", "4")
        payload = json.loads(out)
        assert payload["words"] == {"count": 2, "expected": 2, "pass": True}
        assert payload["dyck_words"]["count"] == 1

    def test_cap(self, capsys):
        code, _, err = run(capsys, "census", "12")
        assert code == 3

    def test_too_small(self, capsys):
        code, _, err = run(capsys, "census", "2")
        assert code == 1


class TestUsage:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_help(self, capsys):
        assert main(["--help"]) == 0

    def test_missing_argument(self, capsys):
        assert main(["classify"]) == 1
