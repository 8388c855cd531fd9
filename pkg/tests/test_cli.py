import json

import pytest

from twobridge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys):
    code, out, err = run(capsys, "analyze", "R2L3R2L")
    assert code == 0
    assert "canonical RL2R3L2" in out
    assert "56/17" in out


def test_analyze_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "R2L3R2L", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "twobridge.analysis/1"
    assert data["components"] == 2


def test_non_hyperbolic_exit_2(capsys):
    code, out, err = run(capsys, "analyze", "R5")
    assert code == 2
    assert out == ""
    assert "non-hyperbolic" in err


def test_parse_error_exit_1(capsys):
    code, out, err = run(capsys, "analyze", "R0L")
    assert code == 1
    assert "position 2" in err


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_valences_excluded_word_notes_exclusion(capsys):
    code, out, _ = run(capsys, "valences", "RLR")
    assert code == 0
    assert "excluded family" in out


def test_valences_table(capsys):
    code, out, _ = run(capsys, "valences", "R2L3R2L")
    assert code == 0
    assert "closed-form table agrees: True" in out


def test_commensurable_exit_codes(capsys):
    code, out, _ = run(capsys, "commensurable", "RL", "R2L2")
    assert code == 0
    assert "commensurable (arithmetic-same-trace-field)" in out
    code, _, err = run(capsys, "commensurable", "RL", "R7")
    assert code == 2


def test_hidden_and_cover(capsys):
    code, out, _ = run(capsys, "hidden", "RL")
    assert code == 0
    assert '"detectable_orientation_preserving_order": 6' in out
    code, out, _ = run(capsys, "cover", "R2L3R2L")
    assert code == 0
    assert "does not irregularly cover" in out


def test_orbifold_cusp(capsys):
    code, out, _ = run(capsys, "orbifold-cusp", "R3L2RL2R3")
    assert code == 0
    assert "S2(2,2,2,2)" in out and "folded" in out
    code, _, err = run(capsys, "orbifold-cusp", "RL")
    assert code == 1
    assert "arithmetic" in err


def test_census_stream_and_file(tmp_path, capsys):
    code, out, _ = run(capsys, "census", "--max-crossings", "4")
    assert code == 0
    lines = out.strip().split("\n")
    summary = json.loads(lines[-1])
    assert summary["schema"] == "twobridge.census-summary/1"
    assert summary["nonsingleton_classes"] == [["R2L2", "RL"]]
    for line in lines[:-1]:
        assert json.loads(line)["schema"] == "twobridge.census-record/1"

    target = tmp_path / "census.jsonl"
    code, _, err = run(capsys, "census", "--max-crossings", "4", "--out", str(target))
    assert code == 0
    assert target.read_text().strip().split("\n") == lines


def test_render_writes_file(tmp_path, capsys):
    target = tmp_path / "out.svg"
    code, _, err = run(capsys, "render", "RL", "--out", str(target),
                       "--copies", "2", "2")
    assert code == 0
    assert target.read_text().startswith("<svg ")


def test_outputs_deterministic(tmp_path, capsys):
    first = run(capsys, "analyze", "R2L3R2L", "--json")
    second = run(capsys, "analyze", "R2L3R2L", "--json")
    assert first == second
    c1 = run(capsys, "census", "--max-crossings", "4")
    c2 = run(capsys, "census", "--max-crossings", "4")
    assert c1 == c2
