import json
import subprocess
import sys

import pytest

from helpers import fg_diagram
from wiring.cli import main
from wiring.diagram import Box, WiringDiagram
from wiring.fuzz import random_host_and_sub

PROGRAM = """ob x y z
hom f : x -> x * y
hom g : y * z -> z
term lhs = (f * id[z]) ; (id[x] * g)
term rhs = (f * id[z]) ; id[x * y * z] ; (id[x] * g) * I
term a = f * id[z]
term b = id[x] * g
term other = b ; a
"""

CHAIN = """ob x y z
hom f : x -> y
hom g : y -> z
term fg = f ; g
term tf = f
term tg = g
"""


@pytest.fixture
def program(tmp_path):
    p = tmp_path / "prog.wd"
    p.write_text(PROGRAM)
    return str(p)


@pytest.fixture
def chain(tmp_path):
    p = tmp_path / "chain.wd"
    p.write_text(CHAIN)
    return str(p)


def test_parse(program, capsys):
    assert main(["parse", program]) == 0
    out = capsys.readouterr().out
    assert "term lhs : x * z -> x * z (2 boxes)" in out
    assert main(["--json", "parse", program]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["generators"]["f"] == {"dom": ["x"], "cod": ["x", "y"]}


def test_parse_error_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.wd"
    p.write_text("ob x y\nhom f : x -> x*y\nterm bad = f ; f\n")
    assert main(["parse", str(p)]) == 1
    assert "3:14" in capsys.readouterr().err
    assert main(["parse", str(tmp_path / "missing.wd")]) == 1


def test_equal(program, capsys):
    assert main(["equal", program, "--term", "lhs", "--term", "rhs"]) == 0
    assert main(["equal", program, "--term", "lhs", "--term", "a"]) == 2
    capsys.readouterr()
    assert main(["--json", "equal", program, "--term", "lhs", "--term", "rhs", "--witness"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["equal"] is True and set(report["witness"]) == {"3", "4"}


def test_equal_type_error_exit_1(tmp_path):
    p = tmp_path / "mismatch.wd"
    p.write_text(CHAIN + "term gf = g ; f\n")
    assert main(["equal", str(p), "--term", "fg", "--term", "gf"]) == 1


def test_equal_needs_two_terms(program):
    assert main(["equal", program, "--term", "lhs"]) == 1
    assert main(["equal", program, "--term", "lhs", "--term", "nope"]) == 1


def test_compose(chain, tmp_path, capsys):
    out = tmp_path / "fg.json"
    assert main(["compose", chain, "--term", "tf", "--term", "tg", "-o", str(out)]) == 0
    assert out.read_text().strip() == fg_diagram().to_json()
    assert main(["compose", chain, "--term", "tg", "--term", "tf"]) == 1


def test_normalize(chain, capsys):
    assert main(["normalize", chain, "--term", "fg"]) == 0
    assert capsys.readouterr().out.strip() == fg_diagram().to_json()


def test_render(chain, tmp_path):
    out = tmp_path / "fg.dot"
    assert main(["render", chain, "--term", "fg", "-o", str(out)]) == 0
    assert out.read_text().startswith("digraph wiring {")


def test_validate(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(fg_diagram().to_json())
    assert main(["validate", str(good)]) == 0
    assert json.loads(capsys.readouterr().out)["valid"] is True

    loop = {"inputs": [], "outputs": [],
            "boxes": [{"id": 3, "value": "t", "inputs": ["a"], "outputs": ["b"]},
                      {"id": 4, "value": "u", "inputs": ["b"], "outputs": ["a"]}],
            "wires": [{"src": [3, 1], "tgt": [4, 1]}, {"src": [4, 1], "tgt": [3, 1]}]}
    bad = tmp_path / "loop.json"
    bad.write_text(json.dumps(loop))
    assert main(["validate", str(bad), "--mode", "general"]) == 2
    assert json.loads(capsys.readouterr().out)["cycle"] == [3, 4]

    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert main(["validate", str(junk)]) == 1


def test_oracle_files(tmp_path, capsys):
    import random
    host, v, sub = random_host_and_sub(random.Random(11))
    h, s = tmp_path / "host.json", tmp_path / "sub.json"
    h.write_text(host.to_json())
    s.write_text(sub.to_json())
    assert main(["oracle", str(h), str(s), "--at", str(v - 2)]) == 0
    assert "1/1 cases agree" in capsys.readouterr().out
    assert main(["oracle", str(h), str(s), "--at", "99"]) == 1
    assert main(["oracle", str(h)]) == 1


def test_oracle_random(capsys):
    assert main(["--json", "oracle", "--random", "50", "--seed", "4"]) == 0
    assert json.loads(capsys.readouterr().out) == {"agree": True, "cases": 50, "failures": []}


def test_usage_error_is_exit_1():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 1


def test_json_error_report(tmp_path, capsys):
    assert main(["--json", "parse", str(tmp_path / "none.wd")]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "CliError"


def test_console_entry_point(chain):
    proc = subprocess.run([sys.executable, "-m", "wiring.cli", "equal", chain,
                           "--term", "fg", "--term", "fg"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "equal"
