import json
import subprocess
import sys

import pytest

from slidingsuffix.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, [json.loads(line) for line in out.splitlines() if line]


def test_stream_reports_slide_counts(tmp_path, capsys):
    path = tmp_path / "t.bin"
    path.write_bytes(b"abacabaca")
    code, (report,) = run_cli(capsys, "stream", str(path), "--window", "5")
    assert code == 0
    assert report["appends"] == 9
    assert report["deletes"] == 4
    assert report["final_window_len"] == 5
    assert report["plp_field_writes_max_event"] <= 4
    assert report["leaves_created"] >= 4


def test_stream_final_window_is_last_bytes(tmp_path, capsys):
    # T[5..9] of abacabaca is abaca again; drive it with checks enabled
    path = tmp_path / "t.bin"
    path.write_bytes(b"abacabaca")
    code, (report,) = run_cli(capsys, "stream", str(path), "--window", "5",
                              "--check-every", "1")
    assert code == 0 and report["appends"] == 9


def test_stream_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.bin"
    path.write_bytes(b"")
    code, (report,) = run_cli(capsys, "stream", str(path), "--window", "4")
    assert code == 0
    assert report["appends"] == 0 and report["deletes"] == 0
    assert report["leaves_created"] == 0


def test_stream_missing_file_fails(tmp_path, capsys):
    code = main(["stream", str(tmp_path / "nope.bin"), "--window", "4"])
    capsys.readouterr()
    assert code != 0


def test_stream_modes_agree_on_topology_counters(tmp_path, capsys):
    path = tmp_path / "t.bin"
    path.write_bytes(b"abcabcababababcbcbca")
    _, (plp,) = run_cli(capsys, "stream", str(path), "--window", "6", "--mode", "plp")
    _, (credit,) = run_cli(capsys, "stream", str(path), "--window", "6",
                           "--mode", "credit")
    for key in ("nodes_created", "nodes_deleted", "leaves_created",
                "leaves_deleted", "explicit_extensions"):
        assert plp[key] == credit[key]


def interact(lines, window=8, mode="plp"):
    proc = subprocess.run(
        [sys.executable, "-m", "slidingsuffix", "interact",
         "--window", str(window), "--mode", mode],
        input="\n".join(lines) + "\n", capture_output=True, text=True, check=True)
    return [json.loads(line) for line in proc.stdout.splitlines() if line]


def test_interact_append_query_roundtrip():
    lines = [json.dumps({"op": "append", "sym": s}) for s in "abaab"]
    lines.append(json.dumps({"op": "query", "pattern": "a"}))
    out = interact(lines)
    assert out[0] == {"ok": True, "tail": 1, "head": 1}
    assert out[4] == {"ok": True, "tail": 1, "head": 5}
    assert out[5] == {"occurrences": [1, 3, 4], "absolute": [1, 3, 4]}


def test_interact_query_before_any_append():
    out = interact([json.dumps({"op": "query", "pattern": "a"})])
    assert out[0]["occurrences"] == []


def test_interact_pattern_longer_than_window():
    lines = [json.dumps({"op": "append", "sym": "a"}),
             json.dumps({"op": "query", "pattern": "aaaa"})]
    out = interact(lines)
    assert out[1]["occurrences"] == []


def test_interact_slide_moves_window_and_reports_absolute():
    lines = [json.dumps({"op": "slide", "sym": s}) for s in "abcab"]
    lines.append(json.dumps({"op": "query", "pattern": "ab"}))
    lines.append(json.dumps({"op": "stats"}))
    out = interact(lines, window=3)
    assert out[4] == {"ok": True, "tail": 3, "head": 5}  # window "cab"
    assert out[5] == {"occurrences": [2], "absolute": [4]}
    assert "leaves_created" in out[6] and "plp_field_writes_max_event" in out[6]


def test_interact_append_on_full_window_reports_error():
    lines = [json.dumps({"op": "append", "sym": "a"}) for _ in range(3)]
    out = interact(lines, window=2)
    assert out[0]["ok"] is True and out[1]["ok"] is True
    assert "error" in out[2]


def test_interact_survives_malformed_lines():
    out = interact(["this is not json",
                    json.dumps({"op": "warp"}),
                    json.dumps({"op": "append", "sym": "a"}),
                    json.dumps({"op": "append", "sym": "toolong"})])
    assert "error" in out[0]
    assert "error" in out[1]
    assert out[2]["ok"] is True
    assert "error" in out[3]


def test_verify_command_passes(capsys):
    code, (report,) = run_cli(capsys, "verify", "--seed", "1", "--iters", "2000",
                              "--sigma", "2", "--window", "8")
    assert code == 0
    assert report["ok"] is True and report["events"] == 2000


def test_verify_degenerate_alphabet(capsys):
    code, (report,) = run_cli(capsys, "verify", "--seed", "5", "--iters", "400",
                              "--sigma", "1", "--window", "6")
    assert code == 0 and report["ok"] is True


def test_verify_window_one(capsys):
    code, (report,) = run_cli(capsys, "verify", "--seed", "2", "--iters", "300",
                              "--sigma", "3", "--window", "1")
    assert code == 0 and report["ok"] is True


@pytest.mark.parametrize("n,variant,bound", [(100, "insert", 100), (2, "delete", 1)])
def test_worstcase_credit_chains(capsys, n, variant, bound):
    code, (report,) = run_cli(capsys, "worstcase", "--n", str(n),
                              "--mode", "credit", "--variant", variant)
    assert code == 0
    assert report["critical_event_value"] >= bound


def test_worstcase_plp_stays_constant(capsys):
    code, (report,) = run_cli(capsys, "worstcase", "--n", "100",
                              "--mode", "plp", "--variant", "insert")
    assert code == 0
    assert report["critical_event_value"] <= 4
