import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from helpers import fg_diagram
from wiring.diagram import GENERAL, STRICT, Box, Port, Wire, WiringDiagram
from wiring.equality import is_equal
from wiring.fuzz import random_diagram, random_host_and_sub, random_nest
from wiring.operad import (
    INCOMING, INTERNAL, OUTGOING, PASSING, SignatureMismatch, inert, ocompose, ocompose_at,
    substitute,
)

T = "t"


def nesting_pieces():
    """Inner diagram: a 3->2 box feeding two 1->1 boxes. Outer: a 3->2 box
    whose second output meets a fourth outer input at a 2->1 box."""
    inner = WiringDiagram([T] * 3, [T] * 2)
    red = inner.add_box(Box("red", [T] * 3, [T] * 2))
    o1 = inner.add_box(Box("orange", [T], [T]))
    o2 = inner.add_box(Box("orange", [T], [T]))
    inner.add_wires([((1, k), (red, k)) for k in (1, 2, 3)])
    inner.add_wires([((red, 1), (o1, 1)), ((red, 2), (o2, 1)),
                     ((o1, 1), (2, 1)), ((o2, 1), (2, 2))])

    outer = WiringDiagram([T] * 4, [T] * 2)
    blue = outer.add_box(Box("X1", [T] * 3, [T] * 2))
    green = outer.add_box(Box("X2", [T] * 2, [T]))
    outer.add_wires([((1, k), (blue, k)) for k in (1, 2, 3)])
    outer.add_wires([((1, 4), (green, 2)), ((blue, 1), (2, 1)),
                     ((blue, 2), (green, 1)), ((green, 1), (2, 2))])
    return outer, inner


def test_nesting_example():
    outer, inner = nesting_pieces()
    result = ocompose_at(outer, 1, inner)
    assert result.is_valid(STRICT)
    assert len(result) == 4
    assert [b.value for b in result.boxes.values()] == ["X2", "red", "orange", "orange"]
    # the path out of the red box's second output reaches the green box in one wire
    red_out2 = result.out_wires((4, 2))
    (w,) = red_out2
    nxt = result.out_wires((w.target.box, 1))
    assert [x.target for x in nxt] == [Port(3, 1)]

    expected = WiringDiagram([T] * 4, [T] * 2)
    red = expected.add_box(Box("red", [T] * 3, [T] * 2))
    o1 = expected.add_box(Box("orange", [T], [T]))
    o2 = expected.add_box(Box("orange", [T], [T]))
    green = expected.add_box(Box("X2", [T] * 2, [T]))
    expected.add_wires([((1, k), (red, k)) for k in (1, 2, 3)])
    expected.add_wires([((red, 1), (o1, 1)), ((red, 2), (o2, 1)), ((o1, 1), (2, 1)),
                        ((o2, 1), (green, 1)), ((1, 4), (green, 2)), ((green, 1), (2, 2))])
    assert is_equal(result, expected)


def test_ocompose_builds_series_composite():
    f = inert(Box("f", ["x"], ["y"]))
    g = inert(Box("g", ["y"], ["z"]))
    seq = WiringDiagram(["x"], ["z"])
    seq.add_box(Box(None, ["x"], ["y"]))
    seq.add_box(Box(None, ["y"], ["z"]))
    seq.add_wires([((1, 1), (3, 1)), ((3, 1), (4, 1)), ((4, 1), (2, 1))])
    assert ocompose(seq, [f, g]).to_json() == fg_diagram().to_json()


def test_ocompose_unit_laws():
    g = fg_diagram()
    assert is_equal(ocompose(inert(Box("any", ["x"], ["z"])), [g]), g)
    assert is_equal(ocompose(g, [inert(b) for b in g.boxes.values()]), g)


def test_signature_mismatch():
    g = fg_diagram()
    with pytest.raises(SignatureMismatch):
        ocompose_at(g, 1, inert(Box("h", ["x"], ["x"])))
    with pytest.raises(SignatureMismatch):
        ocompose(g, [inert(g.box(3))])


def test_inputs_not_mutated():
    outer, inner = nesting_pieces()
    before = (outer.to_json(), inner.to_json())
    substitute(outer, {3: inner, 4: inert(outer.box(4))})
    assert (outer.to_json(), inner.to_json()) == before


def test_box_order_of_result():
    d = WiringDiagram([], [])
    for name in "abc":
        d.add_box(Box(name, [], []))
    sub1 = WiringDiagram([], [])
    sub1.add_boxes([Box("p", [], []), Box("q", [], [])])
    sub3 = WiringDiagram([], [])
    sub3.add_box(Box("r", [], []))
    out = substitute(d, {5: sub3, 3: sub1})
    assert [b.value for b in out.boxes.values()] == ["b", "p", "q", "r"]


def test_passing_wire_and_trace():
    # identity sub: every wire is a passing wire
    host = fg_diagram()
    ident = WiringDiagram(["y"], ["y"])
    ident.add_wire(((1, 1), (2, 1)))
    middle = WiringDiagram(["x"], ["z"])
    middle.add_box(Box("f", ["x"], ["y"]))
    middle.add_box(Box("h", ["y"], ["y"]))
    middle.add_box(Box("g", ["y"], ["z"]))
    middle.add_wires([((1, 1), (3, 1)), ((3, 1), (4, 1)), ((4, 1), (5, 1)), ((5, 1), (2, 1))])
    trace = []
    out = substitute(middle, {4: ident}, trace)
    assert is_equal(out, host)
    assert [c for c, _ in trace] == [PASSING]


def test_general_mode_fusing_is_cartesian():
    # a box fed by two wires at one port and read by three at another
    host = WiringDiagram(["x", "x"], ["x", "x", "x"], mode=GENERAL)
    v = host.add_box(Box("h", ["x"], ["x"]))
    host.add_wires([((1, 1), (v, 1)), ((1, 2), (v, 1))])
    host.add_wires([((v, 1), (2, k)) for k in (1, 2, 3)])
    sub = WiringDiagram(["x"], ["x"], mode=GENERAL)
    sub.add_wire(((1, 1), (2, 1)))
    trace = []
    out = substitute(host, {v: sub}, trace)
    assert len(out.wires) == 6
    assert Counter(c for c, _ in trace) == {PASSING: 6}
    assert out.mode == GENERAL


def test_trace_cases_strict():
    outer, inner = nesting_pieces()
    trace = []
    substitute(outer, {3: inner}, trace)
    assert Counter(c for c, _ in trace) == {INCOMING: 3, INTERNAL: 2, OUTGOING: 2}


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_strict_closure(rng):
    host, v, sub = random_host_and_sub(rng)
    out = substitute(host, {v: sub})
    assert out.is_valid(STRICT)
    assert len(out) == len(host) - 1 + len(sub)


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_unit_laws(rng):
    d, _ = random_diagram(rng, rng.randint(1, 5))
    i = rng.randint(1, len(d))
    assert is_equal(ocompose_at(d, i, inert(d.box(i + 2))), d)
    assert is_equal(ocompose(inert(Box("u", d.input_types, d.output_types)), [d]), d)


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_associativity(rng):
    f, i, g, j, h = random_nest(rng)
    left = substitute(substitute(f, {i: g}), {len(f) + j - 1: h})
    right = substitute(f, {i: substitute(g, {j: h})})
    assert is_equal(left, right)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_simultaneous_equals_sequential(rng):
    a, _ = random_diagram(rng, rng.randint(0, 3), max_outer=3)
    b, _ = random_diagram(rng, rng.randint(0, 3), max_outer=3)
    boxes = [Box("A", a.input_types, a.output_types), Box("B", b.input_types, b.output_types)]
    host, (va, vb) = random_diagram(rng, rng.randint(0, 3), forced=boxes)
    both = substitute(host, {va: a, vb: b})
    first = substitute(host, {va: a})
    vb_after = vb - 1 if vb > va else vb
    assert is_equal(both, substitute(first, {vb_after: b}))

