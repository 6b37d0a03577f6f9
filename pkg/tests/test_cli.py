import json

import pytest

from curvgraph import __version__
from curvgraph import generators as gen
from curvgraph.cli import main
from curvgraph.geometry import is_geometric, stellate_cycles
from curvgraph.graph import SimpleGraph, are_isomorphic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="g.json"):
        p = tmp_path / name
        p.write_text(G.to_json())
        return str(p)
    return write


class TestGen:
    def test_cross_polytope(self, capsys):
        code, out, _ = run(capsys, "gen", "cross-polytope", "3")
        assert code == 0
        G = SimpleGraph.from_json(out)
        assert G.n == 8 and G == gen.cross_polytope(3)

    def test_icosahedron(self, capsys):
        _, out, _ = run(capsys, "gen", "icosahedron")
        assert SimpleGraph.from_json(out).n == 12

    def test_er_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["gen", "er", "40", "0.3", "--seed", "7", "--out", str(a)]) == 0
        assert main(["gen", "er", "40", "0.3", "--seed", "7", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert SimpleGraph.from_json(a.read_text()) == gen.erdos_renyi(40, 0.3, 7)

    def test_round_trip(self, tmp_path, capsys):
        p = tmp_path / "d.json"
        main(["gen", "dodecahedron", "--out", str(p)])
        text = p.read_text()
        assert SimpleGraph.from_json(text).to_json() + "\n" == text

    def test_dot(self, capsys):
        _, out, _ = run(capsys, "gen", "cyclic", "4", "--format", "dot")
        assert out.startswith("graph cyclic {")

    @pytest.mark.parametrize("argv", [
        ["gen", "hypercube", "3"],
        ["gen", "cyclic"],
        ["gen", "cyclic", "x"],
        ["gen", "cyclic", "2"],
        ["gen", "er", "10", "2.0"],
    ])
    def test_bad_input(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err.startswith("error:")


class TestAnalyze:
    def test_cross_polytope_5(self, capsys):
        code, out, _ = run(capsys, "analyze", "--gen", "cross-polytope", "5")
        data = json.loads(out)
        assert code == 0
        assert data["chi"] == 0
        assert set(data["curvature"].values()) == {"0"}
        assert data["f_vector"] == [12, 60, 160, 240, 192, 64]
        assert data["version"] == __version__

    def test_dodecahedron(self, capsys):
        data = json.loads(run(capsys, "analyze", "--gen", "dodecahedron")[1])
        assert data["chi"] == -10 and data["dimension"] == "1"

    def test_stellated_cube(self, capsys, graph_file):
        path = graph_file(stellate_cycles(gen.cube(), 4))
        data = json.loads(run(capsys, "analyze", "--graph", path)[1])
        assert data["chi"] == 2 and data["f_vector"] == [14, 36, 24]

    def test_with_function(self, capsys, tmp_path):
        fp = tmp_path / "f.json"
        fp.write_text("[0, 1]")
        data = json.loads(run(capsys, "analyze", "--gen", "complete", "2", "--function", str(fp))[1])
        assert data["vertices"][0]["j_f"] == "1/2"
        assert data["curvature"] == {"0": "1/2", "1": "1/2"}

    def test_icosahedron_rational_curvature(self, capsys):
        data = json.loads(run(capsys, "analyze", "--gen", "icosahedron", "--seed", "3")[1])
        assert set(data["curvature"].values()) == {"1/6"}
        assert data["config"]["seed"] == 3
        assert len(data["vertices"]) == 12

    @pytest.mark.parametrize("content", ["{", '{"n": 2, "edges": [[0, 2]]}'])
    def test_malformed(self, capsys, tmp_path, content):
        p = tmp_path / "bad.json"
        p.write_text(content)
        assert run(capsys, "analyze", "--graph", str(p))[0] == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "analyze", "--graph", str(tmp_path / "none.json"))[0] == 2

    def test_no_source(self, capsys):
        assert run(capsys, "analyze")[0] == 2

    def test_tied_function(self, capsys, tmp_path):
        fp = tmp_path / "f.json"
        fp.write_text("[1, 1, 2]")
        assert run(capsys, "analyze", "--gen", "path", "3", "--function", str(fp))[0] == 2


class TestVerify:
    def test_all_cross_polytope(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--gen", "cross-polytope", "3",
                           "--trials", "100", "--seed", "1")
        assert code == 0
        assert "FAIL" not in out and out.rstrip().endswith("overall=PASS")

    def test_index_formula_er(self, capsys):
        code, _, _ = run(capsys, "verify", "index-formula", "--gen", "er", "20", "0.25",
                         "--trials", "50", "--seed", "2")
        assert code == 0

    def test_gauss_bonnet_json(self, capsys, graph_file):
        path = graph_file(gen.erdos_renyi(14, 0.4, 5))
        code, out, _ = run(capsys, "verify", "gauss-bonnet", "--graph", path, "--json")
        data = json.loads(out)
        assert code == 0 and data["pass"] is True
        (rep,) = data["reports"]
        assert rep["check"] == "gauss-bonnet"
        assert rep["details"][0]["lhs"] == rep["details"][0]["rhs"]
        assert data["version"] == __version__ and data["seed"] == 0

    def test_precondition_failure_exits_one(self, capsys):
        code, out, _ = run(capsys, "verify", "zero-curvature", "--gen", "complete", "4", "--dim", "3")
        assert code == 1 and "FAIL zero-curvature" in out

    def test_json_reproducible(self, capsys):
        argv = ["verify", "index-expectation", "--gen", "wheel", "9", "--seed", "4",
                "--mc-trials", "5000", "--json"]
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first

    def test_explicit_function(self, capsys, tmp_path):
        fp = tmp_path / "f.json"
        fp.write_text(json.dumps({"0": "1/2", "1": 3, "2": -1, "3": 0.25}))
        code, out, _ = run(capsys, "verify", "poincare-hopf", "--gen", "cyclic", "4",
                           "--function", str(fp), "--json")
        assert code == 0 and len(json.loads(out)["reports"][0]["details"]) == 1

    def test_unknown_check(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonsense", "--gen", "cyclic", "4"])
        assert exc.value.code == 2


class TestHypersurface:
    def test_octahedron_antipodal(self, capsys, tmp_path):
        fp = tmp_path / "f.json"
        # plus side: the antipodal pair 0, 1
        fp.write_text("[1, 1, -1, -1, -1, -1]")
        out = tmp_path / "h.json"
        code, _, _ = run(capsys, "hypersurface", "--gen", "octahedron", "--function", str(fp),
                         "--out", str(out))
        assert code == 0
        data = json.loads(out.read_text())
        H = SimpleGraph.from_dict(data)
        assert H.n == 8
        assert are_isomorphic(H, SimpleGraph(8, [(a, (a + 1) % 4) for a in range(4)]
                                               + [(4 + a, 4 + (a + 1) % 4) for a in range(4)]))
        rows = out.with_suffix(".csv").read_text().splitlines()
        assert rows[0] == "vertices,edges,centers,components,chi,f_vector"
        assert rows[1] == "8,8,0,2,0,8 8"

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "hypersurface", "--gen", "complete", "5", "--seed", "0",
                           "--level", "5/2", "--format", "csv")
        assert code == 0
        # the prism K_2 x K_3 keeps the two triangle fibers
        assert out.splitlines()[1] == "6,9,0,1,-1,6 9 2"

    def test_dot_format(self, capsys):
        _, out, _ = run(capsys, "hypersurface", "--gen", "complete", "4", "--seed", "0",
                        "--level", "1.5", "--complete", "--format", "dot")
        assert "shape=box" in out and "shape=ellipse" in out

    def test_sphere_complete_gives_surface(self, capsys, tmp_path):
        from curvgraph.geometry import suspension
        G = suspension(suspension(gen.icosahedron()))
        gp = tmp_path / "g.json"
        gp.write_text(G.to_json())
        for seed in range(3):
            code, out, _ = run(capsys, "hypersurface", "--graph", str(gp), "--seed", str(seed),
                               "--sphere", "0", "--complete")
            assert code == 0
            H = SimpleGraph.from_dict(json.loads(out))
            if H.n:
                assert is_geometric(H, 2).valid

    def test_all_positive_warns(self, capsys, tmp_path):
        fp = tmp_path / "f.json"
        fp.write_text("[1, 2, 3, 4, 5]")
        code, out, err = run(capsys, "hypersurface", "--gen", "cyclic", "5", "--function", str(fp))
        assert code == 0
        assert "warning" in err
        assert json.loads(out)["n"] == 0

    def test_degenerate_level(self, capsys, tmp_path):
        fp = tmp_path / "f.json"
        fp.write_text("[0, 1, 2, 3]")
        code, _, err = run(capsys, "hypersurface", "--gen", "cyclic", "4", "--function", str(fp),
                           "--level", "2")
        assert code == 2 and "error" in err

    def test_sphere_out_of_range(self, capsys):
        assert run(capsys, "hypersurface", "--gen", "cyclic", "4", "--sphere", "9")[0] == 2


class TestSphere:
    def test_icosahedron(self, capsys):
        _, out, _ = run(capsys, "sphere", "3", "--gen", "icosahedron")
        data = json.loads(out)
        S = SimpleGraph.from_dict(data)
        assert are_isomorphic(S, gen.cyclic(5))
        assert len(data["provenance"]) == 5 and 3 not in data["provenance"]

    def test_dot_labels(self, capsys):
        _, out, _ = run(capsys, "sphere", "0", "--gen", "wheel", "4", "--format", "dot")
        assert 'label="4"' in out

    def test_out_of_range(self, capsys):
        assert run(capsys, "sphere", "12", "--gen", "icosahedron")[0] == 2
