import io
import json

import pytest

from kempe.cli import run
from kempe.generators import complete_graph, petersen_graph, random_colouring
from kempe.graph import EdgeColouring
from kempe.io import colouring_to_json, dump_json, graph_to_json


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, json.loads(buf.getvalue()) if buf.getvalue().strip() else None


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        dump_json(data, path)
        return str(path)
    return write


@pytest.fixture
def petersen(files):
    G = petersen_graph()
    phi = random_colouring(G, 4, seed=0)
    psi = random_colouring(G, 4, seed=1)
    return {
        "graph": files("g.json", graph_to_json(G)),
        "phi": files("phi.json", colouring_to_json(phi)),
        "psi": files("psi.json", colouring_to_json(psi)),
    }


class TestVerify:
    def test_valid(self, petersen):
        code, out = call("verify", "--graph", petersen["graph"], "--phi", petersen["phi"])
        assert code == 0 and out["valid"]

    def test_invalid_reports_conflict(self, files):
        g = files("g.json", graph_to_json(complete_graph(3)))
        c = files("c.json", {"k": 3, "colours": [1, 1, 2]})
        code, out = call("verify", "--graph", g, "--phi", c)
        assert code == 1 and not out["valid"]

    def test_k_mismatch_is_usage_error(self, petersen):
        code, _ = call("verify", "--graph", petersen["graph"], "--phi", petersen["phi"], "--k", "5")
        assert code == 2


class TestPlan:
    def test_plan_then_check(self, petersen, files):
        code, plan = call("plan", "--graph", petersen["graph"], "--phi", petersen["phi"],
                          "--psi", petersen["psi"])
        assert code == 0 and plan["fallback_steps"] == 0
        p = files("plan.json", plan)
        code, out = call("check-plan", "--graph", petersen["graph"], "--phi", petersen["phi"],
                         "--psi", petersen["psi"], "--plan", p)
        assert code == 0 and out["ok"]

    def test_tampered_plan_names_step(self, petersen, files):
        _, plan = call("plan", "--graph", petersen["graph"], "--phi", petersen["phi"],
                       "--psi", petersen["psi"])
        assert plan["steps"]
        step = plan["steps"][0]
        # a pair that excludes the seed edge colour cannot be switched there
        phi = json.load(open(petersen["phi"]))["colours"]
        step["a"], step["b"] = [x for x in range(1, 5) if x != phi[step["seed_edge"]]][:2]
        p = files("bad.json", plan)
        code, out = call("check-plan", "--graph", petersen["graph"], "--phi", petersen["phi"],
                         "--psi", petersen["psi"], "--plan", p)
        assert code == 1 and not out["ok"] and out["failed_step"] == 0

    def test_search_method(self, petersen):
        code, plan = call("plan", "--graph", petersen["graph"], "--phi", petersen["phi"],
                          "--psi", petersen["psi"], "--method", "search")
        assert code == 0 and all(s["tag"] == "search-fallback" for s in plan["steps"])

    def test_rigid_k5_search_not_equivalent(self, files):
        G = complete_graph(5)
        _, reps = call("classes", "--graph", files("g.json", graph_to_json(G)), "--k", "5")
        a, b = (EdgeColouring(5, tuple(r["representative"])) for r in reps["classes"][:2])
        code, out = call("plan", "--graph", files("g.json", graph_to_json(G)),
                         "--phi", files("a.json", colouring_to_json(a)),
                         "--psi", files("b.json", colouring_to_json(b)), "--method", "search")
        assert code == 1 and out["error"] == "not equivalent"

    def test_constructive_outside_theorems_is_usage_error(self, files):
        G = complete_graph(5)
        c = EdgeColouring(5, random_colouring(G, 5, seed=0).colours)
        g = files("g.json", graph_to_json(G))
        p = files("c.json", colouring_to_json(c))
        code, out = call("plan", "--graph", g, "--phi", p, "--psi", p)
        assert code == 2 and "error" in out

    def test_bad_budget(self, petersen):
        code, _ = call("plan", "--graph", petersen["graph"], "--phi", petersen["phi"],
                       "--psi", petersen["psi"], "--budget", "0")
        assert code == 2


class TestClasses:
    def test_k5_kappa_six(self, files):
        g = files("g.json", graph_to_json(complete_graph(5)))
        code, out = call("classes", "--graph", g, "--k", "5")
        assert code == 0 and out["kappa"] == 6

    def test_budget_exhausted(self, files):
        g = files("g.json", graph_to_json(complete_graph(5)))
        code, out = call("classes", "--graph", g, "--k", "5", "--budget", "2")
        assert code == 1 and out["error"] == "budget exhausted"


class TestGenerate:
    def test_p1f_writes_files(self, tmp_path):
        g, c = tmp_path / "g.json", tmp_path / "c.json"
        code, out = call("generate", "p1f", "--order", "6", "--out", str(g),
                         "--colouring-out", str(c))
        assert code == 0 and json.loads(g.read_text()) == out["graph"]
        assert json.loads(c.read_text())["k"] == 5

    def test_rigid_round_trip(self, tmp_path):
        g, c = tmp_path / "g.json", tmp_path / "c.json"
        call("generate", "rigid", "--order", "5", "--out", str(g), "--colouring-out", str(c))
        code, out = call("rigid-test", "--graph", str(g), "--phi", str(c))
        assert code == 0 and out["rigid"] is True

    def test_random_stdout(self):
        code, out = call("generate", "random", "--n", "8", "--max-degree", "3", "--seed", "4")
        assert code == 0 and out["graph"]["n"] == 8

    def test_bad_order_is_usage_error(self):
        code, _ = call("generate", "p1f", "--order", "5")
        assert code == 2


class TestUsage:
    @pytest.mark.parametrize("argv", [[], ["nope"], ["verify"], ["classes", "--k", "x"]])
    def test_argparse_errors(self, argv, capsys):
        assert run(argv, io.StringIO()) == 2

    def test_missing_file(self, tmp_path):
        code, out = call("verify", "--graph", str(tmp_path / "none.json"),
                         "--phi", str(tmp_path / "none.json"))
        assert code == 2 and "error" in out

    def test_length_mismatch(self, files):
        g = files("g.json", graph_to_json(complete_graph(3)))
        c = files("c.json", {"k": 3, "colours": [1, 2]})
        assert call("verify", "--graph", g, "--phi", c)[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(["--help"], io.StringIO()) == 0
