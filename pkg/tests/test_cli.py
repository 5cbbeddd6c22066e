"""Command line interface: exit codes, JSON output, file round trips."""
import json

import pytest

from trivalent.cli import main

THETA_TEXT = "v 2\ne 1 1 2\ne 2 1 2\ne 3 1 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_graph_validate_named(capsys):
    payload = run_json(capsys, "graph", "validate", "theta")
    assert payload["valid"] is True


def test_graph_validate_file(tmp_path, capsys):
    path = tmp_path / "theta.g"
    path.write_text(THETA_TEXT)
    payload = run_json(capsys, "graph", "validate", str(path))
    assert payload["valid"] is True


def test_graph_info(capsys):
    payload = run_json(capsys, "graph", "info", "claw")
    assert sorted(payload["degree_sequence"]) == [1, 1, 1, 3]
    assert payload["external_edges"] == [1, 2, 3]
    assert payload["tree"] is True


def test_unknown_graph_is_usage_error(capsys):
    code, _ = run(capsys, "graph", "info", "no-such-graph")
    assert code == 2


def test_invalid_graph_file_fails_check(tmp_path, capsys):
    path = tmp_path / "bad.g"
    path.write_text("v 2\ne 1 1 2\n")  # an isolated edge is not a {1,3}-graph
    code, _ = run(capsys, "graph", "validate", str(path))
    assert code == 1


def test_nni_sequence_and_replay(tmp_path, capsys):
    out = tmp_path / "seq.json"
    payload = run_json(
        capsys, "nni", "sequence", "theta", "dumbbell", "--output", str(out)
    )
    assert payload["moves"] == [[2, 1, 3, 2, 1]]
    assert payload["relabel"] == []

    code, text = run(capsys, "nni", "replay", "theta", str(out))
    assert code == 0
    assert "v 2" in text and "e 1 1 1" in text and "e 2 2 2" in text


def test_nni_sequence_restricted(capsys):
    payload = run_json(
        capsys, "nni", "sequence", "theta", "dumbbell", "--restrict"
    )
    assert payload["moves"] == [[3, 1, 1, 2, 2]]
    assert payload["relabel"] == [[1, 3], [2, 1], [3, 2]]


def test_wnni_apply(capsys):
    payload = run_json(
        capsys, "wnni", "apply", "theta",
        "--weights", "1,0,1", "--trail", "1,1,3,2,2",
    )
    assert payload["weights"] == {"1": "1", "2": "0", "3": "0"}
    assert payload["case"] in "ABCD"


def test_wnni_apply_named_weights(capsys):
    payload = run_json(
        capsys, "wnni", "apply", "theta",
        "--weights", "1=1,2=0,3=1", "--trail", "1,1,3,2,2",
    )
    assert payload["weights"]["3"] == "0"


def test_bad_weights_exit_codes(capsys):
    # wrong count: well-formed input inconsistent with the graph
    code, _ = run(
        capsys, "wnni", "apply", "theta", "--weights", "1,0", "--trail", "1,1,3,2,2"
    )
    assert code == 1
    # unparseable input is a usage error
    code, _ = run(
        capsys, "wnni", "apply", "theta", "--weights", "a,b,c", "--trail", "1,1,3,2,2"
    )
    assert code == 2


def test_ehrhart_count(capsys):
    payload = run_json(capsys, "ehrhart", "count", "theta", "-t", "4")
    assert payload["count"] == 11
    payload = run_json(capsys, "ehrhart", "count", "claw", "-t", "5/2")
    assert payload["count"] == 4
    payload = run_json(
        capsys, "ehrhart", "count", "claw", "-t", "3", "--method", "backtracking"
    )
    assert payload["count"] == 5


def test_ehrhart_qp(capsys):
    payload = run_json(capsys, "ehrhart", "qp", "claw")
    assert payload["period"] == 2
    assert payload["constituents"][1] == [[1, 4], [11, 24], [1, 4], [1, 24]]


def test_ehrhart_verlinde(capsys):
    payload = run_json(capsys, "ehrhart", "verlinde", "-n", "4", "-t", "5")
    assert payload["count"] == 98
    payload = run_json(
        capsys, "ehrhart", "verlinde", "-n", "2", "-t", "3", "--with-polynomial"
    )
    assert payload["count"] == 5
    assert payload["polynomial"] == [[1, 4], [11, 24], [1, 4], [1, 24]]


def test_ehrhart_volume(capsys):
    payload = run_json(capsys, "ehrhart", "volume", "theta")
    assert payload["ok"] is True
    assert payload["expected_leading"] == [1, 24]


def test_ehrhart_volume_non_cubic_fails(capsys):
    code, _ = run(capsys, "ehrhart", "volume", "claw")
    assert code == 1


def test_ehrhart_semireflexive(capsys):
    payload = run_json(
        capsys, "ehrhart", "semireflexive", "claw", "-s", "1/2", "-s", "11/4"
    )
    assert payload["ok"] is True


def test_scissors_build_and_verify(capsys):
    payload = run_json(capsys, "scissors", "build", "theta", "dumbbell")
    assert len(payload["pieces"]) == 2
    assert [p["determinant"] for p in payload["pieces"]] == [1, 1]
    assert all(c["normal"] == [-1, 1, 0]
               for p in payload["pieces"] for c in p["constraints"])
    assert sorted(c["sense"] for p in payload["pieces"]
                  for c in p["constraints"]) == ["<", ">="]

    payload = run_json(
        capsys, "scissors", "verify", "theta", "dumbbell", "--t-max", "3"
    )
    assert payload["ok"] is True
    assert [d["points"] for d in payload["dilations"]] == [1, 1, 4, 5]


def test_reflexive_check(capsys):
    payload = run_json(capsys, "reflexive", "check", "claw", "--t-max", "2")
    assert payload["ok"] is True


def test_reflexive_hstar(capsys):
    payload = run_json(capsys, "reflexive", "hstar", "claw")
    assert payload["coefficients"] == [1, 7, 7, 1]
    assert payload["palindromic"] is True


def test_reflexive_vertices(capsys):
    payload = run_json(capsys, "reflexive", "vertices", "claw")
    assert len(payload["vertices"]) == 4


def test_tree_table_check(capsys):
    code, out = run(capsys, "tree-table", "--max-edges", "3", "--check")
    assert code == 0
    table = json.loads(out)
    assert table["3"]["odd"] == [[1, 4], [11, 24], [1, 4], [1, 24]]
