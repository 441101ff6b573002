import json

import pytest

from burnkit.cli import main
from burnkit.graph import format_edge_list
from burnkit.generators import path_graph, petersen_graph

from helpers import EIGHT_VERTEX_HIT_EDGES


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.el"
    path.write_text(format_edge_list(path_graph(4)))
    return str(path)


@pytest.fixture
def hit8_file(tmp_path):
    lines = ["8 7"] + [f"{u} {v}" for u, v in EIGHT_VERTEX_HIT_EDGES]
    path = tmp_path / "hit8.el"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_burn(capsys, p4_file):
    code, out = run(capsys, "burn", p4_file, "--sources", "1,3")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"rounds": [2, 1, 2, 2], "completion": 2}


def test_burn_with_preburn(capsys, p4_file):
    code, out = run(capsys, "burn", p4_file, "--sources", "0,0", "--preburn", "3")
    assert code == 0
    assert json.loads(out)["rounds"] == [1, 2, 2, 1]


def test_solve(capsys, p4_file):
    code, out = run(capsys, "solve", p4_file)
    assert code == 0
    assert json.loads(out) == {"k": 2, "sources": [1, 3]}


def test_solve_limit_gate(capsys, p4_file):
    code, _ = run(capsys, "solve", p4_file, "--limit-exact", "3")
    assert code == 2


def test_hit_plan(capsys, hit8_file):
    code, out = run(capsys, "hit-plan", hit8_file)
    assert code == 0
    plan = json.loads(out)
    assert plan["bound"] == 3 and plan["completion"] <= 3


def test_hit_plan_rejects_path(capsys, p4_file):
    code, _ = run(capsys, "hit-plan", p4_file)
    assert code == 2


def test_tree_plan(capsys, p4_file):
    code, out = run(capsys, "tree-plan", p4_file)
    assert code == 0
    plan = json.loads(out)
    assert plan["bound"] == 3 and plan["completion"] <= plan["bound"]


def test_hist_found_and_not(capsys, tmp_path):
    pet = tmp_path / "pet.el"
    pet.write_text(format_edge_list(petersen_graph()))
    code, out = run(capsys, "hist", str(pet))
    assert code == 0 and out.startswith("10 9\n")
    c4 = tmp_path / "c4.el"
    c4.write_text("4 4\n0 1\n0 3\n1 2\n2 3\n")
    code, out = run(capsys, "hist", str(c4))
    assert code == 0 and out.strip() == "no HIST"


def test_spanning_min(capsys, p4_file):
    code, out = run(capsys, "spanning-min", p4_file)
    assert code == 0
    assert json.loads(out)["k"] == 2


def test_gen_and_env_seed(capsys, monkeypatch):
    code, out1 = run(capsys, "gen", "random_tree", "-n", "12", "--seed", "4")
    assert code == 0
    monkeypatch.setenv("BURNKIT_SEED", "4")
    code, out2 = run(capsys, "gen", "random_tree", "-n", "12")
    assert code == 0 and out1 == out2


def test_gen_path(capsys):
    code, out = run(capsys, "gen", "path", "-n", "4")
    assert code == 0
    assert out == "4 3\n0 1\n1 2\n2 3\n"


def test_verify_pass_and_fail(capsys, tmp_path, p4_file):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"sources": [1, 3]}))
    code, out = run(capsys, "verify", p4_file, str(good))
    assert code == 0 and json.loads(out)["valid"]

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"sources": [0]}))
    code, out = run(capsys, "verify", p4_file, str(bad))
    assert code == 1 and not json.loads(out)["valid"]

    over_bound = tmp_path / "over.json"
    over_bound.write_text(json.dumps({"sources": [1, 3], "bound": 1}))
    code, _ = run(capsys, "verify", p4_file, str(over_bound))
    assert code == 1


def test_input_errors_exit_two(capsys, tmp_path):
    code, _ = run(capsys, "solve", str(tmp_path / "missing.el"))
    assert code == 2
    junk = tmp_path / "junk.el"
    junk.write_text("not a graph\n")
    code, _ = run(capsys, "solve", str(junk))
    assert code == 2


def test_bench_command(capsys, tmp_path):
    spec = tmp_path / "bench.json"
    spec.write_text(
        json.dumps(
            {
                "families": [{"family": "path", "sizes": [4, 9]}],
                "exact_limit": 16,
            }
        )
    )
    out_csv = tmp_path / "bench.csv"
    code, out = run(capsys, "bench", str(spec), "-o", str(out_csv))
    assert code == 0
    assert out_csv.read_text().startswith("instance_id,")
    assert out.startswith("n\t")
