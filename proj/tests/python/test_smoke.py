import json
import os
import subprocess

import pytest

import flagpath

CLI = os.environ.get("FLAGPATH_CLI")


def run_cli(*args, check=True):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def test_counts():
    assert flagpath.count_configurations([1, 1, 1], 2) == 63
    assert flagpath.count_configurations([1, 1, 1], 3) == 856
    assert flagpath.tbp_count(2, 3, 3) == 2885
    assert flagpath.count_by_filter([1, 1], 2) == 5


def test_counts_are_python_ints():
    big = flagpath.count_configurations([1, 1, 1], 40)
    assert isinstance(big, int)
    assert big > 10**50


def test_bounds():
    b = flagpath.bounds([1, 1, 1], 2, True)
    assert b["upper"] == 90
    assert b["lower_hook"] == 5
    assert b["lower_product"] == 60
    assert b["exact"] == 63
    assert flagpath.bounds([2, 1], 1)["lower_hook"] is None


def test_diagram():
    entries = flagpath.diagram(1, 2, 1, 2)
    assert entries[0] == [0, 0, 0, 0, 1]
    assert entries[2][0] is None  # starred cell


def test_path_predicate():
    assert flagpath.is_configuration_path([3, 2, 1, 3, 2, 1], [1, 1, 1], 2)
    assert not flagpath.is_configuration_path([1, 2, 1, 3, 2, 3], [1, 1, 1], 2)


def test_reachable_and_simulate():
    flags = flagpath.reachable_configurations([1, 1, 1], 2)
    assert len(flags) == 63
    final = flagpath.simulate([1, 1, 1], 2, [[[1, 2], [1]], [[3, 4], [2]]])
    assert final == [[5, 6], [3, 4], [1, 2]]


def test_realize_round_trip():
    target = [[5, 6], [3, 4], [1, 2]]
    turns = flagpath.realize([1, 1, 1], 2, target)
    assert flagpath.simulate([1, 1, 1], 2, turns) == target
    with pytest.raises(flagpath.FlagpathError):
        flagpath.realize([1, 1, 1], 2, [[1, 2], [3, 4], [5, 6]])


def test_is_flag_matroid():
    flags = flagpath.reachable_configurations([1, 1], 2)
    verdict = flagpath.is_flag_matroid(4, [2, 2], flags)
    assert verdict["ok"]
    bad = flagpath.is_flag_matroid(3, [1, 1, 1], [[[1], [2], [3]], [[2], [3], [1]]])
    assert not bad["ok"]
    assert bad["axiom"] == 2


def test_nested_bases():
    assert flagpath.nested_bases("NE") == [[1], [2]]
    assert len(flagpath.nested_bases("NNEEENNEEE")) == flagpath.tbp_count(2, 3, 2)


def test_errors_are_typed():
    with pytest.raises(flagpath.FlagpathError):
        flagpath.count_by_filter([1, 1, 1], 5)  # ground set above the limit


# ---- CLI subprocess checks --------------------------------------------------


def test_cli_available():
    assert CLI and os.path.exists(CLI)


def test_cli_count_bounds():
    out = run_cli("count", "--l", "1,1,1", "--n", "2", "--bounds").stdout.strip()
    assert out == '{"count": 63, "upper": 90, "lower_hook": 5, "lower_product": 60}'


def test_cli_count_methods_agree():
    for method in ("dp", "filter", "bfs"):
        out = run_cli("count", "--l", "1,1", "--n", "3", "--method", method).stdout
        assert json.loads(out)["count"] == 14


def test_cli_diagram_csv():
    out = run_cli("diagram", "--l", "2,4,3", "--n", "3", "--format", "csv").stdout
    rows = out.strip().split("\n")
    assert rows[0] == "," + ",".join(str(y) for y in range(13))
    assert rows[1] == "0,0,0,0,0,0,0,0,3,3,3,3,3,3"
    assert rows[4].startswith("3,*,6,5,4,3")


def test_cli_diagram_json():
    out = run_cli("diagram", "--l", "1,2,1", "--n", "2").stdout
    payload = json.loads(out)
    assert payload["l"] == [1, 2, 1]
    assert payload["entries"][2][0] is None


def test_cli_bases():
    out = json.loads(run_cli("bases", "--path", "NE").stdout)
    assert out["bases"] == [[1], [2]]
    counted = json.loads(run_cli("bases", "--path", "NNEEENNEEENNEEE", "--count").stdout)
    assert counted["count"] == 2885


def test_cli_verify(tmp_path):
    family = {
        "ground_size": 3,
        "flag_rank": [1, 1, 1],
        "flags": [
            [[1], [2], [3]], [[1], [3], [2]], [[2], [1], [3]],
            [[2], [3], [1]], [[3], [1], [2]], [[3], [2], [1]],
        ],
    }
    path = tmp_path / "family.json"
    path.write_text(json.dumps(family))
    verdict = json.loads(run_cli("verify", "--input", str(path)).stdout)
    assert verdict == {"ok": True, "constituent_ranks": [1, 2, 3]}


def test_cli_realize():
    out = json.loads(
        run_cli("realize", "--l", "1,1,1", "--n", "2", "[[5,6],[3,4],[1,2]]").stdout
    )
    assert out == {"turns": [{"moves": [[1, 2], [1]]}, {"moves": [[3, 4], [2]]}]}


def test_cli_exit_codes():
    usage = run_cli("count", "--n", "2", check=False)  # missing --l
    assert usage.returncode == 2
    domain = run_cli("diagram", "--l", "1,1", "--n", "2", check=False)  # k != 3
    assert domain.returncode == 1
    assert "DimensionMismatch" in domain.stderr
