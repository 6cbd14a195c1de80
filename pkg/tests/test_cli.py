import json

import pytest

from tcurve_lab.cli import main, parse_problem, problem_from_data
from tcurve_lab.errors import ParseError, ValidationError


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


T3_HARNACK = """\
polygon: [[0,0],[3,0],[0,3]]
signs: {harnack: [1,0,0]}
"""


def test_parse_harnack(tmp_path):
    prob = parse_problem(write(tmp_path, "t3.yaml", T3_HARNACK))
    assert prob.signs == ("harnack", (1, 0, 0))
    assert prob.triangulation == "grid"


def test_parse_roundtrip(tmp_path):
    import yaml
    prob = parse_problem(write(tmp_path, "t3.yaml", T3_HARNACK))
    again = problem_from_data(yaml.safe_load(yaml.safe_dump(prob.data())))
    assert again.data() == prob.data()


def test_parse_explicit_missing_sign():
    with pytest.raises(ValidationError) as err:
        problem_from_data({
            "polygon": [[0, 0], [1, 0], [0, 1]],
            "signs": {"explicit": {"0,0": 1, "1,0": -1}},
        })
    assert "(0, 1)" in str(err.value)


def test_parse_triangulation_index_error():
    prob = problem_from_data({
        "polygon": [[0, 0], [1, 0], [0, 1]],
        "triangulation": [[0, 1, 99]],
        "signs": {"harnack": [1, 0, 0]},
    })
    with pytest.raises(ValidationError) as err:
        prob.build_triangulation()
    assert "triangulation[0]" in str(err.value)


def test_parse_syntax_error(tmp_path):
    with pytest.raises(ParseError):
        parse_problem(write(tmp_path, "bad.yaml", "polygon: [[0,0"))


def test_explicit_triangulation_by_indices():
    # indices refer to the lexicographically sorted lattice points
    prob = problem_from_data({
        "polygon": [[0, 0], [1, 0], [0, 1]],
        "triangulation": [[0, 1, 2]],
        "signs": {"harnack": [1, 0, 0]},
    })
    tri = prob.build_triangulation()
    assert tri.T == 1


# ---------------------------------------------------------------------------
# subcommands through main()

def run_main(capsys, args):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_filling_subcommand(tmp_path, capsys):
    path = write(tmp_path, "t3.yaml", T3_HARNACK)
    code, out = run_main(capsys, ["filling", "--input", path])
    assert code == 0
    rep = json.loads(out)
    f = rep["filling"]
    assert (f["chi_filling"], f["boundary_components"], f["chi_capped"]) == (0, 2, 2)
    assert f["curve_type"] == "I" and f["harnack"]["maximal"]


def test_surface_subcommand(tmp_path, capsys):
    path = write(tmp_path, "sq.yaml",
                 "polygon: [[0,0],[2,0],[2,2],[0,2]]\nsigns: enumerate\n")
    code, out = run_main(capsys, ["surface", "--input", path])
    assert code == 0
    assert json.loads(out)["surface"]["topology"]["name"] == "torus"


def test_enumerate_subcommand(tmp_path, capsys):
    path = write(tmp_path, "t2.yaml",
                 "polygon: [[0,0],[2,0],[0,2]]\nsigns: enumerate\n")
    code, out = run_main(capsys, ["enumerate", "--input", path])
    assert code == 0
    rep = json.loads(out)["enumerate"]
    assert rep["runs"] == 64
    assert rep["max_components"] == 1
    assert rep["bound_violations"] == 0


def test_enumerate_cap(tmp_path, capsys):
    path = write(tmp_path, "t5.yaml",
                 "polygon: [[0,0],[5,0],[0,5]]\nsigns: enumerate\n")
    code, _ = run_main(capsys, ["enumerate", "--input", path])
    assert code == 2  # 21 lattice points exceed the default cap


def test_harnack_subcommand_with_type_flag(tmp_path, capsys):
    path = write(tmp_path, "t4.yaml",
                 "polygon: [[0,0],[4,0],[0,4]]\nsigns: enumerate\n")
    code, out = run_main(capsys, ["harnack", "--input", path, "--type", "0,1,1"])
    assert code == 0
    assert json.loads(out)["harnack_census"]["match"]


def test_render_deterministic(tmp_path):
    path = write(tmp_path, "t3.yaml", T3_HARNACK)
    out1, out2 = str(tmp_path / "a.svg"), str(tmp_path / "b.svg")
    assert main(["render", "--input", path, "--out", out1]) == 0
    assert main(["render", "--input", path, "--out", out2]) == 0
    a, b = open(out1, "rb").read(), open(out2, "rb").read()
    assert a == b
    assert a.startswith(b"<?xml")


def test_render_draws_one_group_per_component(tmp_path):
    path = write(tmp_path, "t5.yaml",
                 "polygon: [[0,0],[5,0],[0,5]]\nsigns: {harnack: [1,0,0]}\n")
    out = str(tmp_path / "t5.svg")
    assert main(["render", "--input", path, "--out", out]) == 0
    svg = open(out).read()
    assert svg.count('stroke-width="4"') == 7  # matches the census


def test_exit_code_input_error(tmp_path, capsys):
    path = write(tmp_path, "bad.yaml", "polygon: [[0,0],[1,1],[2,2]]\n")
    code, _ = run_main(capsys, ["surface", "--input", path])
    assert code == 2


def test_exit_code_invariant_violation(tmp_path, capsys, monkeypatch):
    # force a census mismatch to exercise the exit-1 path
    import tcurve_lab.cli as cli
    monkeypatch.setattr(cli, "verify_harnack_census", lambda *a: False)
    path = write(tmp_path, "t3.yaml", T3_HARNACK)
    code, _ = run_main(capsys, ["harnack", "--input", path])
    assert code == 1


def test_reports_deterministic_up_to_timing(tmp_path, capsys):
    path = write(tmp_path, "t3.yaml", T3_HARNACK)
    _, out1 = run_main(capsys, ["curve", "--input", path])
    _, out2 = run_main(capsys, ["curve", "--input", path])
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("timing_ms"), r2.pop("timing_ms")
    assert r1 == r2
