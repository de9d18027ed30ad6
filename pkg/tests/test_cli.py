"""Command line driver: exit codes, output formats, determinism."""

import json

import pytest

from gag import GammaGroupoid, parse_model, parse_models, serialize_model
from gag.cli import main
from gag.fixtures import PAPER_EXAMPLE_TOKEN

M5 = PAPER_EXAMPLE_TOKEN

# Left invertive and strong but not intra-regular.
GAP3_TEXT = serialize_model(GammaGroupoid(3, 1, (0, 0, 0, 0, 0, 2, 0, 1, 0)))
# Left projection: not left invertive.
NOT_LI_TEXT = serialize_model(GammaGroupoid.from_tables([[[0, 0], [1, 1]]]))


def run(capsys, *argv):
    # argparse exits via SystemExit on parse errors; fold that into the code.
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_text(capsys):
    code, out, _ = run(capsys, "check", M5)
    assert code == 0
    assert "elements: a b c d e" in out
    assert "left-invertive: true" in out
    assert "ag-star-star: true" in out
    assert "left-identities: b" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", M5, "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["profile"]["left-invertive"] is True
    assert obj["profile"]["left-identities"] == [1]
    assert obj["model"]["elements"] == ["a", "b", "c", "d", "e"]


def test_check_failing_model_exits_3(capsys, monkeypatch, tmp_path):
    path = tmp_path / "m.gag"
    path.write_text(NOT_LI_TEXT)
    code, out, _ = run(capsys, "check", str(path))
    assert code == 3
    assert "left-invertive: false" in out
    assert "[x=a y=a z=b gamma=g0 delta=g0]" in out
    assert "left-identities: none" in out


def test_check_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(GAP3_TEXT))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0
    assert "left-invertive: true" in out


def test_intra_text_and_exit(capsys, tmp_path):
    code, out, _ = run(capsys, "intra", M5)
    assert code == 0
    assert "intra-regular: true" in out
    assert "a = (a.(a.a)).a" in out
    assert "c = (b.(c.c)).c" in out

    path = tmp_path / "gap.gag"
    path.write_text(GAP3_TEXT)
    code, out, _ = run(capsys, "intra", str(path))
    assert code == 3
    assert "intra-regular: false" in out
    assert "b: no witness" in out


def test_intra_json(capsys):
    code, out, _ = run(capsys, "intra", M5, "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["intra-regular"] is True
    assert obj["witnesses"]["c"] == {
        "x": "b",
        "y": "c",
        "beta": "g0",
        "delta": "g0",
        "gamma": "g0",
        "rendered": "c = (b.(c.c)).c",
    }


def test_ideals_all_kinds(capsys):
    code, out, _ = run(capsys, "ideals", M5, "--kind", "all")
    assert code == 0
    assert "subgroupoid (7):" in out
    assert "two-sided (2):" in out
    assert (
        "coinciding: left = right = two-sided = bi = gbi = interior = quasi = one-two"
        in out
    )


def test_ideals_single_kind(capsys):
    code, out, _ = run(capsys, "ideals", M5, "--kind", "left")
    assert code == 0
    assert "left (2):" in out
    assert "{a}" in out and "{a, b, c, d, e}" in out


def test_ideals_generated(capsys):
    code, out, _ = run(
        capsys, "ideals", M5, "--kind", "left", "--generated-from", "b"
    )
    assert code == 0
    assert "{a, b, c, d, e}" in out
    code, out, _ = run(
        capsys, "ideals", M5, "--kind", "two-sided", "--generated-from", "a"
    )
    assert code == 0
    assert "{a}" in out


def test_ideals_dot(capsys):
    code, out, _ = run(capsys, "ideals", M5, "--kind", "two-sided", "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "rankdir=BT" in out
    assert '"{a}" -> "{a, b, c, d, e}"' in out


def test_ideals_json(capsys):
    code, out, _ = run(capsys, "ideals", M5, "--kind", "quasi", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "quasi"
    assert obj["family"] == [["a"], ["a", "b", "c", "d", "e"]]


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", M5)
    assert code == 0
    assert "31 checks: 29 pass, 2 vacuous" in out
    assert "JI" in out and "MINIMAL" in out


def test_verify_selection(capsys):
    code, out, _ = run(capsys, "verify", M5, "--theorem", "ki", "--theorem", "aw")
    assert code == 0
    assert "2 checks: 2 pass" in out


def test_verify_gap_model_exits_2(capsys, tmp_path):
    path = tmp_path / "gap.gag"
    path.write_text(GAP3_TEXT)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 2
    assert "rintl:converse" in out


def test_verify_skipped_model_exits_3(capsys, tmp_path):
    path = tmp_path / "bad.gag"
    path.write_text(NOT_LI_TEXT)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 3
    assert "skipped" in out


def test_verify_json_is_byte_deterministic(capsys):
    code, first, _ = run(capsys, "verify", M5, "--json")
    assert code == 0
    code, second, _ = run(capsys, "verify", M5, "--json")
    assert first == second
    obj = json.loads(first)
    assert len(obj["reports"]) == 31
    assert obj["axiom-profile"]["paramedial"] is True


def test_search_text_round_trips(capsys):
    code, out, _ = run(capsys, "search", "--order", "2")
    assert code == 0
    found = parse_models("".join(l + "\n" for l in out.splitlines() if not l.startswith("#")))
    assert len(found) == 3
    assert "# count=3 truncated=false" in out


def test_search_count(capsys):
    code, out, _ = run(capsys, "search", "--order", "3", "--axiom", "agss", "--count")
    assert code == 0
    assert "count=16" in out


def test_search_limit_truncates(capsys):
    code, out, _ = run(capsys, "search", "--order", "3", "--limit", "5", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 5
    assert obj["truncated"] is True
    assert obj["search"]["limit"] == 5


def test_search_json_stable_across_workers(capsys):
    args = ["search", "--order", "3", "--filter", "intra-regular", "--json"]
    code, one, _ = run(capsys, *args, "--workers", "1")
    assert code == 0
    code, two, _ = run(capsys, *args, "--workers", "2")
    assert one == two
    assert "workers" not in json.loads(one)["search"]


def test_search_hunt_found_exits_2(capsys):
    code, out, _ = run(
        capsys,
        "search",
        "--order",
        "3",
        "--axiom",
        "agss",
        "--find-counterexample",
        "rintl",
    )
    assert code == 2
    assert "found=true" in out
    assert "rintl:converse" in out


def test_search_hunt_clean_exits_0(capsys):
    code, out, _ = run(
        capsys,
        "search",
        "--order",
        "3",
        "--axiom",
        "agss",
        "--find-counterexample",
        "ki",
    )
    assert code == 0
    assert "found=false" in out


def test_canon(capsys, tmp_path):
    code, out, _ = run(capsys, "canon", M5)
    assert code == 0
    canon = parse_model(out)
    assert canon.table == (
        0, 0, 0, 0, 0,
        0, 1, 2, 3, 4,
        0, 2, 1, 4, 3,
        0, 4, 3, 1, 2,
        0, 3, 4, 2, 1,
    )


def test_canon_agrees_for_isomorphic_presentations(capsys, tmp_path):
    g = GammaGroupoid(3, 1, (0, 0, 0, 0, 0, 2, 0, 1, 0))
    # Relabel by x -> 2 - x and serialize both presentations.
    flat = [0] * 9
    for x in range(3):
        for y in range(3):
            flat[(2 - x) * 3 + (2 - y)] = 2 - g.product(x, 0, y)
    relab = GammaGroupoid(3, 1, tuple(flat))
    p1 = tmp_path / "one.gag"
    p2 = tmp_path / "two.gag"
    p1.write_text(serialize_model(g))
    p2.write_text(serialize_model(relab))
    code1, out1, _ = run(capsys, "canon", str(p1))
    code2, out2, _ = run(capsys, "canon", str(p2))
    assert code1 == code2 == 0
    assert out1 == out2


class TestUsageErrors:
    def test_unknown_theorem(self, capsys):
        code, _, err = run(capsys, "verify", M5, "--theorem", "nope")
        assert code == 64

    def test_dot_with_kind_all(self, capsys):
        code, _, err = run(capsys, "ideals", M5, "--kind", "all", "--dot")
        assert code == 64
        assert "--dot" in err

    def test_generated_from_needs_generated_kind(self, capsys):
        code, _, err = run(
            capsys, "ideals", M5, "--kind", "bi", "--generated-from", "a"
        )
        assert code == 64
        assert "--generated-from" in err

    def test_missing_subcommand(self, capsys):
        code, _, _ = run(capsys)
        assert code == 64

    def test_search_missing_order(self, capsys):
        code, _, _ = run(capsys, "search")
        assert code == 64

    def test_bad_flag_value(self, capsys):
        code, _, _ = run(capsys, "search", "--order", "two")
        assert code == 64


class TestDataErrors:
    def test_malformed_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("garbage\n"))
        code, _, err = run(capsys, "check", "-")
        assert code == 65
        assert "line 1" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "/nonexistent/m.gag")
        assert code == 65

    def test_unknown_seed_element(self, capsys):
        code, _, err = run(
            capsys, "ideals", M5, "--kind", "left", "--generated-from", "z"
        )
        assert code == 65
        assert "z" in err

    def test_sweep_cap_exceeded(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("GAG_SWEEP_CAP", "4")
        # Fresh table: family sweeps are memoized per model, so a model
        # some earlier test already swept would dodge the cap here.
        path = tmp_path / "wide.gag"
        path.write_text(serialize_model(GammaGroupoid(5, 1, (0,) * 25)))
        code, _, err = run(capsys, "ideals", str(path), "--kind", "left")
        assert code == 65
        assert "GAG_SWEEP_CAP" in err

    def test_search_too_large(self, capsys):
        code, _, err = run(capsys, "search", "--order", "7")
        assert code == 65
