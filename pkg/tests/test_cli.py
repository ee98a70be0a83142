"""Command-line behaviour: exit codes, JSON contracts, and the worked
examples that the library's fixtures pin down."""

import json

import pytest

from weakbruhat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_analyze_4132_json(capsys):
    code, data, _ = run_json(capsys, "analyze", "4132")
    assert code == 0
    assert data == {
        "word": "4132",
        "length": 4,
        "descents": [1, 3],
        "separable": True,
        "gf_below": "1 + 2*q + 2*q^2 + 2*q^3 + q^4",
        "gf_above": "1 + q + q^2",
        "product_is_qfactorial": True,
        "rank_symmetric": True,
        "unimodal": True,
        "cyclotomic_product": True,
    }


def test_analyze_identity(capsys):
    code, data, _ = run_json(capsys, "analyze", "1234")
    assert code == 0
    assert data["gf_below"] == "1"
    assert data["length"] == 0
    assert data["descents"] == []


def test_analyze_non_separable(capsys):
    code, data, _ = run_json(capsys, "analyze", "2413")
    assert code == 0
    assert data["separable"] is False
    assert data["gf_below"] == "1 + 2*q + q^2 + q^3"
    assert data["product_is_qfactorial"] is False


def test_analyze_s4_rank_histogram(capsys):
    # sizes per rank across all of S4, recovered from the analyze output
    from itertools import permutations

    counts = [0] * 7
    for word in permutations(range(1, 5)):
        text = "".join(str(a) for a in word)
        _, data, _ = run_json(capsys, "analyze", text)
        counts[data["length"]] += 1
    assert counts == [1, 3, 5, 6, 5, 3, 1]


def test_analyze_text_output_aligned(capsys):
    code, out, _ = run(capsys, "analyze", "4132")
    assert code == 0
    lines = [line for line in out.splitlines() if line]
    assert any(line.startswith("word") and line.endswith("4132") for line in lines)
    assert any(line.startswith("gf_below") for line in lines)
    # keys are padded to a common width, so values start at one column
    starts = {len(line) - len(line.split(None, 1)[1]) for line in lines}
    assert len(starts) == 1


def test_tree_text_and_dot(capsys):
    code, out, _ = run(capsys, "tree", "4231")
    assert code == 0
    assert out.count("negative") == 2
    assert out.count("positive") == 1
    assert out.count("leaf") == 4

    code, dot, _ = run(capsys, "tree", "4231", "--dot")
    assert code == 0
    assert dot.count('"Negative Node"') == 2
    assert dot.count('"Positive Node"') == 1


def test_tree_json(capsys):
    code, _, err = run(capsys, "tree", "3142", "--json")
    assert code == 1
    assert "error:" in err
    code, data, _ = run_json(capsys, "tree", "4231")
    assert code == 0
    assert data["sign"] == "negative"


def test_tree_rejects_non_separable(capsys):
    code, out, err = run(capsys, "tree", "2413")
    assert code == 1
    assert "error:" in err
    assert out == ""


def test_interval_gf(capsys):
    code, out, _ = run(capsys, "interval", "4132", "--side", "above", "--gf")
    assert code == 0
    assert out.strip() == "1 + q + q^2"
    code, out, _ = run(capsys, "interval", "4132", "--side", "below", "--gf")
    assert code == 0
    assert out.strip() == "1 + 2*q + 2*q^2 + 2*q^3 + q^4"


def test_interval_summary_and_dot(capsys):
    code, out, _ = run(capsys, "interval", "321", "--side", "below")
    assert code == 0
    assert "bottom" in out and "123" in out
    assert "size" in out and "6" in out

    code, dot, _ = run(capsys, "interval", "321", "--side", "below", "--dot")
    assert code == 0
    assert dot.count("->") == 6


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "op-lemma")
    assert code == 0
    assert "suite op-lemma" in out
    assert "pass:" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    code, data, _ = run_json(capsys, "verify", "duality", "--n", "4")
    assert code == 0
    assert data["suite"] == "duality"
    assert data["passed"] is True
    assert all(check["passed"] for check in data["checks"])


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2


def test_survey_command(tmp_path, capsys):
    out = tmp_path / "s4.csv"
    code, data, _ = run_json(capsys, "survey", "--n", "4", "--out", str(out))
    assert code == 0
    assert data["count_separable"] == 22
    assert data["total"] == 24
    assert out.exists()


def test_survey_guard_exit(capsys):
    code, out, err = run(capsys, "survey", "--n", "9")
    assert code == 1
    assert "--force" in err or "force" in err


def test_bijection_check(capsys):
    code, data, _ = run_json(capsys, "bijection", "2413")
    assert code == 0
    assert data["separable"] is False
    assert data["is_bijection"] is False
    assert data["collisions"]
    code, data, _ = run_json(capsys, "bijection", "4132")
    assert data["is_bijection"] is True


def test_bijection_invert(capsys):
    code, data, _ = run_json(capsys, "bijection", "4132", "--invert", "2314")
    assert code == 0
    u, v = data["u"], data["v"]
    assert len(u) == 4 and len(v) == 4


def test_bijection_table(tmp_path, capsys):
    out = tmp_path / "pairs.csv"
    code, _, _ = run(capsys, "bijection", "312", "--table", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "u,v,w"
    assert len(lines) == 7


def test_parse_errors_exit_2(capsys):
    for bad in ("125", "0", "abc", "1,2,2"):
        code, out, err = run(capsys, "analyze", bad)
        assert code == 2
        assert "usage error:" in err


def test_force_prints_memory_note(capsys):
    code, out, err = run(capsys, "analyze", "4132", "--force")
    assert code == 0
    assert "MB" in err or err == ""
