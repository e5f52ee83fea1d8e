import json

import pytest

from lexsafe.cli import main
from lexsafe.io import dumps, fixture_names, load_fixture, parse_instance


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fixture_catalogue():
    names = set(fixture_names())
    assert {f"g{i}" for i in range(1, 10)} <= names
    assert {"gamma1", "gamma2", "gamma3", "fig3", "veto-demo", "mb-demo"} <= names


def test_solve_g1(capsys):
    code, out, _ = run(capsys, "solve", "g1")
    report = json.loads(out)
    assert code == 0 and report["certified"]
    assert report["equilibria"]["alice"]["ne_outcome"] == "w1"
    assert report["equilibria"]["bob"]["ne_outcome"] == "w2"
    assert report["labels"] == ["w1", "w2", "w3"]


def test_solve_veto_demo_matches_expansion(capsys):
    code, out, _ = run(capsys, "solve", "veto-demo")
    assert code == 0
    report = json.loads(out)
    code, out, _ = run(capsys, "expand", "veto-demo")
    path_free = json.loads(out)
    inst = parse_instance(path_free)
    import brute
    cells = inst.oracle.cells
    order_a = [inst.oracle.labels.index(w) for w in path_free["preferences"]["alice"]]
    order_b = [inst.oracle.labels.index(w) for w in path_free["preferences"]["bob"]]
    nash_outcomes = {inst.oracle.labels[cells[x][y]] for x, y in brute.nash_equilibria(cells, order_a, order_b)}
    for entry in report["equilibria"].values():
        assert entry["ne_outcome"] in nash_outcomes


def test_output_is_byte_stable(capsys):
    first = run(capsys, "solve", "mb-demo")[1]
    second = run(capsys, "solve", "mb-demo")[1]
    assert first == second and first.endswith("\n")


def test_player_and_dichotomy_flags(capsys):
    code, out, _ = run(capsys, "solve", "g1", "--player", "bob", "--dichotomy")
    assert code == 0 and list(json.loads(out)["equilibria"]) == ["bob"]


def test_malformed_preference(tmp_path, capsys):
    data = json.loads(dumps(load_fixture("g1").data))
    data["preferences"]["alice"] = ["w1", "w1", "w2"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2 and "w1" in err


@pytest.mark.parametrize("patch", [
    {"schema_version": 2},
    {"oracle": {"type": "nope"}},
    {"oracle": {"type": "veto", "mu_a": 2, "mu_b": 1, "resistance": [1, 1, 1]}},
    {"extra": True},
])
def test_invalid_instances(tmp_path, capsys, patch):
    data = {"schema_version": 1, "oracle": {"type": "explicit", "matrix": [["w1"]]}}
    data.update(patch)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    assert run(capsys, "tight", str(path))[0] == 2


def test_missing_schema_version_and_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"oracle": {"type": "explicit", "matrix": [["w1"]]}}))
    code, _, err = run(capsys, "tight", str(path))
    assert code == 2 and "schema_version" in err
    assert run(capsys, "tight", str(tmp_path / "missing.json"))[0] == 2
    path.write_text("{not json")
    assert run(capsys, "tight", str(path))[0] == 2


def test_solve_without_preferences(capsys):
    assert run(capsys, "solve", "g2")[0] == 2


def test_not_tight_exit(capsys, tmp_path):
    data = json.loads(dumps(load_fixture("g7").data))
    data["preferences"] = {"alice": ["w1", "w2"], "bob": ["w2", "w1"]}
    path = tmp_path / "g7.json"
    path.write_text(json.dumps(data))
    assert run(capsys, "solve", str(path))[0] == 3
    assert run(capsys, "pm1", "g7", "--omega-a", "w1")[0] == 3


def test_size_limit_exit(capsys):
    assert run(capsys, "expand", "mb-demo", "--limit-expansion", "2")[0] == 4


def test_pm1(capsys):
    code, out, _ = run(capsys, "pm1", "g1", "--omega-a", "w1")
    res = json.loads(out)
    assert code == 0 and res["winner"] == "alice" and res["strategy"] == 0
    code, out, _ = run(capsys, "pm1", "g1", "--omega-a", "w2")
    assert json.loads(out)["winner"] == "bob" and json.loads(out)["strategy"] == 1
    assert run(capsys, "pm1", "g1", "--omega-a", "w7")[0] == 2


def test_tight(capsys):
    out = json.loads(run(capsys, "tight", "g7")[1])
    assert out["tight"] is False
    bad = out["untight_partition"]
    cells = load_fixture("g7").oracle.to_labels()
    assert not any(set(row) <= set(bad["omega_a"]) for row in cells)
    assert not any(set(col) <= set(bad["omega_b"]) for col in zip(*cells))
    assert json.loads(run(capsys, "tight", "gamma2")[1])["tight"] is True


def test_expand_gamma1(capsys):
    out = json.loads(run(capsys, "expand", "gamma1")[1])
    import brute
    assert brute.equal_up_to_permutation(out["oracle"]["matrix"], [["w1", "w1"], ["w2", "w3"]])


@pytest.mark.parametrize("name", ["gamma1", "veto-demo", "mb-demo"])
def test_expand_round_trip(tmp_path, capsys, name):
    original = json.loads(run(capsys, "solve", name)[1])
    path = tmp_path / "explicit.json"
    path.write_text(run(capsys, "expand", name)[1])
    again = json.loads(run(capsys, "solve", str(path))[1])
    for who in ("alice", "bob"):
        assert again["equilibria"][who]["ne_outcome"] == original["equilibria"][who]["ne_outcome"]


def test_verify(tmp_path, capsys):
    report = tmp_path / "r.json"
    report.write_text(run(capsys, "solve", "gamma1")[1])
    code, out, _ = run(capsys, "verify", str(report), "gamma1")
    assert code == 0 and json.loads(out)["verified"]
    data = json.loads(report.read_text())
    data["equilibria"]["alice"]["y_strategy"] = {"B": "w2"}
    report.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(report), "gamma1")
    assert code == 1 and not json.loads(out)["verified"]
    data["schema_version"] = 7
    report.write_text(json.dumps(data))
    assert run(capsys, "verify", str(report), "gamma1")[0] == 2


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck", "--seed", "3", "--instances", "3", "--preferences", "2")
    res = json.loads(out)
    assert code == 0 and res["ok"] and res["seed"] == 3
    assert run(capsys, "selfcheck", "--seed", "3", "--instances", "3", "--preferences", "2")[1] == out
