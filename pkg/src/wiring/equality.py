"""Equality of wiring diagrams up to renumbering of inner boxes.

Two diagrams are equal when some bijection between their inner boxes
preserves box labels and port types and carries the wires of one onto the
wires of the other, port for port. The outer ports are never permuted.

Candidates are narrowed by color refinement (label, port types, and the
colors of neighbors at each port) before an exact backtracking search.
"""
from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass

from .diagram import INPUT_ID, OUTPUT_ID, DiagramError, Wire, WiringDiagram


class ModeMismatch(DiagramError):
    pass


class _Graph:
    """Integer view of a diagram used by refinement and search."""

    __slots__ = ("d", "boxes", "wires", "incident")

    def __init__(self, d: WiringDiagram):
        self.d = d
        self.boxes = list(d.box_ids())
        self.wires = [(w.source.box, w.source.port, w.target.box, w.target.port)
                      for w in d.wires]
        self.incident = {v: [] for v in self.boxes}
        for w in self.wires:
            if w[0] >= 3:
                self.incident[w[0]].append(w)
            if w[2] >= 3 and w[2] != w[0]:
                self.incident[w[2]].append(w)


def _rank(keys_per_graph: list[dict]) -> list[dict]:
    ranks = {k: r for r, k in enumerate(sorted({k for keys in keys_per_graph
                                                for k in keys.values()}))}
    return [{v: ranks[k] for v, k in keys.items()} for keys in keys_per_graph]


def _neighbor(color: dict, v: int, port: int) -> tuple:
    # outer ports are rigid, so they are identified by index
    if v == INPUT_ID or v == OUTPUT_ID:
        return (0, v, port)
    return (1, color[v], port)


def _refine(graphs: list[_Graph], colors: list[dict]) -> list[dict]:
    """Refine box colors jointly until the partition stops splitting."""
    n_classes = len({c for col in colors for c in col.values()})
    while True:
        keys = []
        for g, col in zip(graphs, colors):
            out = {v: [] for v in g.boxes}
            inc = {v: [] for v in g.boxes}
            for sb, sp, tb, tp in g.wires:
                if sb >= 3:
                    out[sb].append((sp,) + _neighbor(col, tb, tp))
                if tb >= 3:
                    inc[tb].append((tp,) + _neighbor(col, sb, sp))
            keys.append({v: (col[v], tuple(sorted(out[v])), tuple(sorted(inc[v])))
                         for v in g.boxes})
        colors = _rank(keys)
        count = len({c for col in colors for c in col.values()})
        if count == n_classes:
            return colors
        n_classes = count


def _initial(graphs: list[_Graph]) -> list[dict]:
    return _rank([{v: g.d.box(v).signature for v in g.boxes} for g in graphs])


def _outer_wires(g: _Graph) -> Counter:
    return Counter(w for w in g.wires if w[0] < 3 and w[2] < 3)


def is_equal(a: WiringDiagram, b: WiringDiagram, witness: bool = False):
    """Decide equality; with ``witness=True`` return ``(equal, mapping)``.

    The mapping sends box ids of ``a`` to box ids of ``b`` (None if unequal).
    """
    mapping = find_isomorphism(a, b)
    if witness:
        return mapping is not None, mapping
    return mapping is not None


def find_isomorphism(a: WiringDiagram, b: WiringDiagram) -> dict[int, int] | None:
    if a.mode != b.mode:
        raise ModeMismatch(f"cannot compare a {a.mode} diagram with a {b.mode} diagram")
    if (a.input_types != b.input_types or a.output_types != b.output_types
            or len(a) != len(b) or len(a.wires) != len(b.wires)):
        return None
    ga, gb = _Graph(a), _Graph(b)
    if _outer_wires(ga) != _outer_wires(gb):
        return None
    ca, cb = _refine([ga, gb], _initial([ga, gb]))
    if Counter(ca.values()) != Counter(cb.values()):
        return None

    cells = {}
    for v, c in cb.items():
        cells.setdefault(c, []).append(v)
    cell_size = Counter(ca.values())
    order = sorted(ga.boxes, key=lambda v: (cell_size[ca[v]], ca[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def image(v):
        return v if v < 3 else mapping[v]

    def consistent(x: int, y: int) -> bool:
        left = Counter()
        for w in ga.incident[x]:
            other = w[2] if w[0] == x else w[0]
            if other < 3 or other == x or other in mapping:
                left[(image(w[0]), w[1], image(w[2]), w[3])] += 1
        right = Counter()
        for w in gb.incident[y]:
            other = w[2] if w[0] == y else w[0]
            if other < 3 or other == y or other in used:
                right[w] += 1
        return left == right

    def search(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in cells[ca[x]]:
            if y in used:
                continue
            mapping[x] = y
            used.add(y)
            if consistent(x, y) and search(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if search(0) else None


# -- canonical form ------------------------------------------------------------------

@dataclass
class CanonicalForm:
    """A diagram renumbered into canonical order.

    ``certificate`` maps each original box id to its canonical id.
    """

    diagram: WiringDiagram
    certificate: dict[int, int]

    def to_json(self) -> str:
        return self.diagram.to_json()


def _leaf_key(g: _Graph, order: list[int]) -> tuple:
    new = {v: k for k, v in enumerate(order, 3)}
    new[INPUT_ID], new[OUTPUT_ID] = INPUT_ID, OUTPUT_ID
    wires = sorted((new[sb], sp, new[tb], tp) for sb, sp, tb, tp in g.wires)
    return (tuple(g.d.box(v).signature for v in order), tuple(wires))


def _canonical_order(g: _Graph) -> list[int]:
    if not g.boxes:
        return []
    best_key, best_order = None, None

    def search(colors: dict):
        nonlocal best_key, best_order
        colors = _refine([g], [colors])[0]
        cells = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        if len(cells) == len(g.boxes):
            order = sorted(g.boxes, key=colors.__getitem__)
            key = _leaf_key(g, order)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        c, cell = min(((c, vs) for c, vs in cells.items() if len(vs) > 1),
                      key=lambda item: (len(item[1]), item[0]))
        isolated_done = False
        for v in cell:
            if not g.incident[v]:
                # boxes without wires are interchangeable
                if isolated_done:
                    continue
                isolated_done = True
            split = {u: (col, 0 if u == v else 1) for u, col in colors.items()}
            search(_rank([split])[0])

    search(_initial([g])[0])
    return best_order


def canonicalize(d: WiringDiagram) -> CanonicalForm:
    g = _Graph(d)
    order = _canonical_order(g)
    new = {v: k for k, v in enumerate(order, 3)}
    out = WiringDiagram(d.input_types, d.output_types, mode=d.mode)
    for v in order:
        out.add_box(d.box(v))
    ids = {INPUT_ID: INPUT_ID, OUTPUT_ID: OUTPUT_ID, **new}
    wires = sorted(((ids[sb], sp), (ids[tb], tp)) for sb, sp, tb, tp in g.wires)
    # already validated input: bypass the strict-mode insertion checks
    for w in wires:
        out._wires.append(Wire.make(*w))
    out._rebuild_graph()
    return CanonicalForm(out, new)


def invariant_hash(d: WiringDiagram) -> int:
    """64-bit digest of the canonical form; equal diagrams hash equally."""
    text = canonicalize(d).to_json().encode()
    return int.from_bytes(hashlib.blake2b(text, digest_size=8).digest(), "big")
