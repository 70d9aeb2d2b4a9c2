import json
import subprocess
import sys

import pytest

from octaweak import hsym
from octaweak.cli import run
from octaweak.perm import parse


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_compare(capsys):
    assert call(capsys, "compare", "1,3,2", "1,3,-2") == (0, "true (length gap 3)", "")
    code, out, _ = call(capsys, "compare", "2,1,3", "1,3,2")
    assert (code, out) == (1, "false")


def test_compare_json(capsys):
    code, out, _ = call(capsys, "compare", "1,3,2", "1,3,-2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["leq"] is True and data["length_gap"] == 3


def test_lattice_verbs(capsys):
    assert call(capsys, "join", "2,1,3", "-1,2,3")[1] == "-1,-2,3"
    assert call(capsys, "meet", "2,-3,1", "1,2,3")[1] == "1,2,3"
    assert call(capsys, "mobius", "2,3,1", "3,2,1")[1] == "-1"
    assert call(capsys, "interval", "1,2,3", "-1,-2,3", "--count")[1] == "8"
    assert call(capsys, "covers", "1,2")[1].splitlines() == ["-1,2", "2,1"]


def test_hasse(capsys):
    assert call(capsys, "hasse", "--n", "3")[1] == "B3: 48 vertices, 72 edges, height 9"
    code, out, _ = call(capsys, "hasse", "--n", "2", "--dot")
    assert code == 0 and out.startswith('digraph "B2"')


def test_rank_cap_errors(capsys, monkeypatch):
    monkeypatch.delenv("OCTAWEAK_MAX_N", raising=False)
    code, out, err = call(capsys, "hasse", "--n", "7")
    assert code == 2 and out == ""
    assert err.startswith("octaweak: error:") and len(err.splitlines()) == 1


def test_usage_errors(capsys):
    code, _, err = call(capsys, "compare", "1,2", "1")
    assert code == 2 and "size mismatch" in err
    code, _, err = call(capsys, "compare", "1,1", "1,2")
    assert code == 2 and err.startswith("octaweak: error:")
    code, _, _ = call(capsys, "no-such-verb")
    assert code == 2


def test_zeta(capsys):
    assert call(capsys, "zeta", "{0,1}", "--n", "3")[1] == "-1,-3,-2"
    assert call(capsys, "zeta", "0,1", "--n", "3")[1] == "-1,-3,-2"


def test_components(capsys):
    code, out, _ = call(capsys, "components", "--blocks", "2,1")
    assert code == 0
    assert out.splitlines() == ["B2 x B1,{}: [1,2,3; -1,-2,3]", "B2 x B1,{1}: [1,2,-3; -1,-2,-3]"]
    assert call(capsys, "components", "--blocks", "2,1", "--check", "partition")[1] == "true"
    assert call(capsys, "components", "--blocks", "1,2", "--check", "gap")[1] == "3 (-1,-3,2 < -1,-3,-2)"


def test_factorize(capsys):
    out = call(capsys, "factorize", "4,-2,-6,1,7,-3,5,-8", "--p", "4")[1]
    assert out == "xi=1,2,4,6,3,5,7,8 left=3,-2,-4,1 right=3,-1,2,-4"


def test_product_and_coproduct(capsys):
    code, out, _ = call(capsys, "product", "1,-2", "-2,1", "--json")
    assert code == 0
    assert hsym.FormalSum.from_json(json.loads(out)) == hsym.F(parse("1,-2")) * hsym.F(parse("-2,1"))
    out = call(capsys, "coproduct", "1,-4,-2,3")[1]
    assert out.startswith("F[] (x) F[1,-4,-2,3] + F[1] (x) F[-3,-1,2]")


def test_sum_arguments_accept_json(capsys, tmp_path):
    x = hsym.F(parse("1")) + hsym.F(parse("-1"))
    path = tmp_path / "x.json"
    path.write_text(json.dumps(x.to_json()))
    code, out, _ = call(capsys, "product", f"@{path}", "1", "--json")
    assert code == 0
    assert hsym.FormalSum.from_json(json.loads(out)) == x * hsym.F(parse("1"))
    code, out, _ = call(capsys, "convert", json.dumps(x.to_json()), "--to", "M")
    assert code == 0 and out


def test_convert(capsys):
    out = call(capsys, "convert", "2,3,1", "--basis", "M", "--to", "F")[1]
    assert out == "-F[2,3,-1] + F[2,3,1] + F[3,2,-1] - F[3,2,1]"


def test_descent_map(capsys):
    assert call(capsys, "descent-map", "-1,-3,-2")[1] == "F(0,1,2)"
    assert call(capsys, "descent-map", "-1,-3,-2", "--basis", "M")[1] == "M(0,1,2)"


def test_output_is_deterministic(capsys):
    first = call(capsys, "product", "2,-1", "1,-2")
    second = call(capsys, "product", "2,-1", "1,-2")
    assert first == second


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--list")
    assert code == 0
    assert out.splitlines()[0].startswith("order-criterion:")
    code, out, _ = call(capsys, "verify", "order-criterion", "--max-n", "3")
    assert code == 0 and out.splitlines()[0].startswith("PASS order-criterion")
    code, _, err = call(capsys, "verify", "no-such-suite")
    assert code == 2 and err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "octaweak", "mobius", "2,3,1", "3,2,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "-1"
