import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from helpers import fg_diagram, shuffled
from wiring.diagram import GENERAL, Box, WiringDiagram
from wiring.equality import ModeMismatch, canonicalize, invariant_hash, is_equal
from wiring.fuzz import random_diagram
from wiring.smc import generator
from wiring.spans import span_iso, wd_to_span


def interchange_pair():
    f = generator("f", ["a"], ["b"])
    g = generator("g", ["b"], ["c"])
    h = generator("h", ["d"], ["e"])
    k = generator("k", ["e"], ["f"])
    return ((f @ h) >> (g @ k)).diagram, ((f >> g) @ (h >> k)).diagram


def test_interchange_equal():
    a, b = interchange_pair()
    assert is_equal(a, b)
    assert invariant_hash(a) == invariant_hash(b)
    assert canonicalize(a).to_json() == canonicalize(b).to_json()


def test_label_swap_unequal():
    d = fg_diagram()
    e = WiringDiagram(["x"], ["z"])
    e.add_box(Box("g", ["x"], ["y"]))
    e.add_box(Box("f", ["y"], ["z"]))
    e.add_wires([((1, 1), (3, 1)), ((3, 1), (4, 1)), ((4, 1), (2, 1))])
    assert not is_equal(d, e)


def test_witness():
    d = fg_diagram()
    e, perm = shuffled(d, random.Random(1))
    ok, mapping = is_equal(d, e, witness=True)
    assert ok and mapping == perm
    ok, mapping = is_equal(d, WiringDiagram(["x"], ["z"]), witness=True)
    assert not ok and mapping is None


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        is_equal(fg_diagram(), fg_diagram().copy(mode=GENERAL))


def test_outer_ports_rigid():
    # two parallel identical boxes, crossed or not on the outside
    a = WiringDiagram(["x", "x"], ["y", "y"])
    a.add_boxes([Box("f", ["x"], ["y"]), Box("g", ["x"], ["y"])])
    a.add_wires([((1, 1), (3, 1)), ((1, 2), (4, 1)), ((3, 1), (2, 1)), ((4, 1), (2, 2))])
    b = WiringDiagram(["x", "x"], ["y", "y"])
    b.add_boxes([Box("f", ["x"], ["y"]), Box("g", ["x"], ["y"])])
    b.add_wires([((1, 1), (3, 1)), ((1, 2), (4, 1)), ((3, 1), (2, 2)), ((4, 1), (2, 1))])
    assert not is_equal(a, b)


def test_general_mode_multiplicity():
    def build(n):
        d = WiringDiagram(["x"], [], mode=GENERAL)
        d.add_box(Box("c", ["x"], []))
        for _ in range(n):
            d.add_wire(((1, 1), (3, 1)))
        return d
    assert is_equal(build(2), build(2))
    assert not is_equal(build(1), build(2))


def test_canonical_golden():
    expected = Path(__file__).parent / "fixtures" / "fg_canonical.json"
    assert canonicalize(fg_diagram()).to_json() == expected.read_text().strip()


def test_twin_isolated_boxes():
    d = WiringDiagram([], [])
    d.add_boxes([Box("e", [], [])] * 8)
    c = canonicalize(d)
    assert len(c.diagram) == 8 and sorted(c.certificate.values()) == list(range(3, 11))


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(0, 7))
def test_renumbering_invariance(rng, n):
    d, _ = random_diagram(rng, n, labels=("f", "g"), types=("a", "b"))
    e, _ = shuffled(d, rng)
    ok, mapping = is_equal(d, e, witness=True)
    assert ok
    assert is_equal(e, d)
    assert invariant_hash(d) == invariant_hash(e)
    cd, ce = canonicalize(d), canonicalize(e)
    assert cd.to_json() == ce.to_json()
    assert canonicalize(cd.diagram).to_json() == cd.to_json()
    assert is_equal(d, cd.diagram)
    # soundness against the span engine: the witness aligns the boxes
    order = [mapping[k + 2] - 2 for k in range(1, len(d) + 1)]
    assert span_iso(wd_to_span(d), wd_to_span(e).reorder_boxes(order))


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_canonical_iff_equal(rng):
    a, _ = random_diagram(rng, rng.randint(0, 4), labels=("f",), types=("a",), max_ports=2)
    b, _ = random_diagram(rng, rng.randint(0, 4), labels=("f",), types=("a",), max_ports=2)
    same = canonicalize(a).to_json() == canonicalize(b).to_json()
    assert same == is_equal(a, b)
    if is_equal(a, b):
        assert invariant_hash(a) == invariant_hash(b)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_equivalence_relation(rng):
    a, _ = random_diagram(rng, rng.randint(0, 5))
    b, _ = shuffled(a, rng)
    c, _ = shuffled(b, rng)
    assert is_equal(a, a) and is_equal(a, b) and is_equal(b, c) and is_equal(a, c)


def test_hash_is_prefilter_only():
    rng = random.Random(7)
    seen = {}
    for _ in range(1000):
        d, _ = random_diagram(rng, rng.randint(0, 4))
        h = invariant_hash(d)
        assert 0 <= h < 2 ** 64
        for other in seen.get(h, []):
            # a shared hash must come from an actually equal diagram
            assert is_equal(d, other)
        seen.setdefault(h, []).append(d)


def test_canonical_json_schema():
    a, _ = interchange_pair()
    data = json.loads(canonicalize(a).to_json())
    assert list(data) == ["inputs", "outputs", "boxes", "wires"]
