import re
from pathlib import Path

from helpers import fg_diagram
from wiring.diagram import Box, WiringDiagram
from wiring.dot import export_dot
from wiring.equality import canonicalize
from wiring.syntax import compile_term

FIXTURE = Path(__file__).parent / "fixtures" / "fg.dot"


def nodes(text):
    return re.findall(r"^\s*(n\d+) \[", text, re.M)


def edges(text):
    return re.findall(r"^\s*n\d+:o\d+ -> n\d+:i\d+", text, re.M)


def test_fg_golden():
    text = export_dot(fg_diagram())
    assert text == FIXTURE.read_text().rstrip("\n")
    assert len(nodes(text)) == 4 and len(edges(text)) == 3


def test_empty_diagram():
    text = export_dot(WiringDiagram([], []))
    assert nodes(text) == ["n1", "n2"] and not edges(text)


def test_edges_labelled_by_type():
    text = export_dot(fg_diagram())
    assert re.findall(r'label="(\w)"\];$', text, re.M) == ["x", "y", "z"]


def test_escaping():
    d = WiringDiagram(["a"], [])
    d.add_box(Box('we{ir}d|"x"', ["a"], []))
    d.add_wire(((1, 1), (3, 1)))
    text = export_dot(d)
    assert r'we\{ir\}d\|\"x\"' in text


def test_interchange_identical_after_canonicalize():
    src = """ob a b c d e k
    hom f : a -> b
    hom g : b -> c
    hom h : d -> e
    hom k : e -> k
    term lhs = (f ; g) * (h ; k)
    term rhs = (f * h) ; (g * k)
    """
    lhs = canonicalize(compile_term(src, "lhs").diagram).diagram
    rhs = canonicalize(compile_term(src, "rhs").diagram).diagram
    assert export_dot(lhs) == export_dot(rhs)
    assert export_dot(lhs) == export_dot(lhs)
