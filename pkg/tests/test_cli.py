import json

import pytest

from artin353.cli import main


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


def test_enumerate_h3(capsys, fixtures):
    code, out = run(capsys, "coxeter", "enumerate", "--diagram", str(fixtures / "h3.dgm"))
    assert code == 0
    assert "order=120 reflections=15 longest=15" in out
    assert "oracle=agree" in out


def test_enumerate_affine_is_indeterminate(capsys, fixtures):
    code, out = run(capsys, "coxeter", "enumerate", "--diagram", str(fixtures / "affine.dgm"), "--cutoff", "500")
    assert code == 2 and out.startswith("indeterminate")


def test_structured_output(capsys, fixtures):
    code, out = run(capsys, "coxeter", "enumerate", "--diagram", str(fixtures / "b3.dgm"), "--format", "structured")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 48


@pytest.mark.parametrize("args", [
    ("nonsense",),
    ("coxeter", "enumerate", "--diagram", "bad.dgm"),
    ("gb", "audit", "--diagram-file", "missing.dd"),
    ("coxeter", "enumerate"),
    ("arrangement", "build", "--diagram", "a2.dgm", "--format", "yaml"),
    ("bestvina", "convexity", "--window", "3"),
    ("bgeodesic", "--from", "nowhere", "--to", "v0_0"),
])
def test_usage_errors_exit_3(capsys, fixtures, monkeypatch, args):
    monkeypatch.chdir(fixtures)
    assert main(list(args)) == 3


def test_arrangement_commands(capsys, fixtures):
    a2 = str(fixtures / "a2.dgm")
    assert run(capsys, "arrangement", "build", "--diagram", a2) == (0, "hyperplanes=3 cells=[6, 6, 1]\n")
    assert run(capsys, "arrangement", "salvetti", "--diagram", a2) == (0, "salvetti cells=[6, 12, 6]\n")
    assert run(capsys, "arrangement", "decone", "--diagram", a2) == (0, "deconed hyperplanes=2 cells=[3, 2]\n")


def test_artin_commands(capsys, fixtures):
    a2 = str(fixtures / "a2.dgm")
    code, out = run(capsys, "artin", "girth", "--diagram", a2, "--radius", "3", "--at-least", "6")
    assert code == 0 and "girth=6" in out
    code, _ = run(capsys, "artin", "girth", "--diagram", a2, "--radius", "3", "--at-least", "7")
    assert code == 1
    code, out = run(capsys, "artin", "nf", "--diagram", a2, "--word", "s t s s")
    assert code == 0 and out.strip() == "D^1 (s)"


def test_square_check(capsys, fixtures):
    code, out = run(capsys, "check353", "square", "--in", str(fixtures / "grid2x2.sqc"))
    assert code == 0 and "axiom5: true" in out
    code, out = run(capsys, "check353", "square", "--in", str(fixtures / "badaxiom1.sqc"))
    assert code == 1 and "axiom1: false witness=" in out


def test_simplicial_check(capsys, fixtures):
    assert run(capsys, "check353", "simplicial", "--in", str(fixtures / "four_tetrahedra.cx"))[0] == 0
    code, out = run(capsys, "check353", "simplicial", "--in", str(fixtures / "cond3.cx"))
    assert code == 1 and "3: false" in out


def test_contract(capsys, fixtures):
    code, out = run(capsys, "check353", "contract", "--in", str(fixtures / "grid2x2.sqc"))
    assert code == 0 and "replay=ok" in out
    corner = str(fixtures / "corner.sqc")
    assert run(capsys, "check353", "contract", "--in", corner)[0] == 1
    assert run(capsys, "check353", "contract", "--in", corner, "--allow-narrow")[0] == 0


def test_bestvina_commands(capsys, fixtures):
    code, out = run(capsys, "bgeodesic", "--window", "3", "--from", "v0_0", "--to", "v2_-1")
    assert code == 0 and out.splitlines()[0] == "v0_0 v1_-1 v2_-1"
    same = run(capsys, "bestvina", "geodesic", "--window", "3", "--from", "v0_0", "--to", "v2_-1")
    assert same == (code, out)
    assert run(capsys, "bgeodesic", "--window", "3", "--from", "v0_0", "--to", "v3_0")[0] == 2
    code, out = run(capsys, "bestvina", "convexity", "--window", "3", "--subset", str(fixtures / "subset.txt"))
    assert code == 0 and "locally_b_convex: true" in out
    assert run(capsys, "bestvina", "convexity", "--window", "3", "--half-plane", "1:0")[0] == 0


def test_gauss_bonnet_audit(capsys, fixtures):
    code, out = run(capsys, "gb", "audit", "--diagram-file", str(fixtures / "corner.dd"))
    assert code == 0 and out.splitlines()[-1] == "total=2pi OK"
    for angles in ("right", "random"):
        code, out = run(capsys, "gb", "audit", "--diagram-file", str(fixtures / "grid2x2.dd"), "--angles", angles)
        assert code == 0 and "total=2pi OK" in out


def test_graph_classify(capsys, fixtures):
    code, out = run(capsys, "graph", "classify", "--in", str(fixtures / "c5.edges"))
    assert code == 0 and out.startswith("class=")
    assert run(capsys, "graph", "classify", "--in", str(fixtures / "triangle.edges"))[0] == 1


def test_output_is_deterministic(capsys, fixtures):
    args = ("check353", "contract", "--in", str(fixtures / "grid3x3.sqc"))
    assert run(capsys, *args) == run(capsys, *args)
    args = ("gb", "audit", "--diagram-file", str(fixtures / "grid2x2.dd"), "--angles", "random", "--seed", "7")
    assert run(capsys, *args) == run(capsys, *args)
