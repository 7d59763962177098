"""Spans of typed finite sets and their block-matrix calculus.

A span ``dom <- apex -> cod`` is stored with its apex elements as *wires*.
Its fully decomposed matrix has one row per domain element, one column per
codomain element, and the set of wires joining them in each cell:

>>> s = Span.from_wires(
...     TypedFiniteSet("rst", "aab"), TypedFiniteSet("xyz", "bab"),
...     {"A": ("t", "z"), "B": ("r", "y"), "C": ("t", "x"), "D": ("t", "z")})
>>> print(format_matrix(span_to_matrix(s)))
   x    y    z
r  0    {B}  0
s  0    0    0
t  {C}  0    {A,D}

Composition of matrices takes the Cartesian product of wire sets, naming a
composite wire by the flat tuple of the wires it fuses.

A wiring diagram with inner boxes ``t1..tn`` and outer box ``v`` becomes a
span from ``v- + t+`` to ``t- + v+``. Domain and codomain elements are
``("v", port)`` for the outer box and ``(k, port)`` for inner box ``k``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .diagram import INPUT_ID, OUTPUT_ID, STRICT, Box, DiagramError, Port, WiringDiagram

OUTER = "v"


class SpanError(DiagramError):
    pass


class DuplicateWire(SpanError):
    pass


class BasisMismatch(SpanError):
    pass


class IndexOutOfRange(SpanError):
    pass


class NotStrict(SpanError):
    pass


class ProgressViolation(SpanError):
    pass


class SignatureMismatch(SpanError):
    pass


class TypeMismatch(SpanError):
    pass


# -- wire names ----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Tagged:
    """A wire name disambiguated by a tag, used when two apexes share names."""

    tag: Hashable
    name: Hashable

    def __str__(self):
        return f"{self.tag}.{self.name}"


def _flat(w) -> tuple:
    return w if type(w) is tuple else (w,)


def fuse(a, b) -> tuple:
    """Name of the wire obtained by fusing ``a`` then ``b``."""
    return _flat(a) + _flat(b)


def wire_str(w) -> str:
    if type(w) is tuple:
        return "(" + ",".join(wire_str(x) for x in w) + ")"
    return str(w)


# -- typed finite sets ------------------------------------------------------------

@dataclass(frozen=True)
class TypedFiniteSet:
    """A finite set with a type for each element, enumerated in a fixed order."""

    elements: tuple
    types: tuple

    def __init__(self, elements: Iterable, types: Iterable[str]):
        elements, types = tuple(elements), tuple(types)
        if len(elements) != len(types):
            raise ValueError("every element needs exactly one type")
        if len(set(elements)) != len(elements):
            raise ValueError("elements must be unique")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "types", types)

    @classmethod
    def of_types(cls, types: Iterable[str]) -> TypedFiniteSet:
        """The typed set ``{1..n}`` with the given types in order."""
        types = tuple(types)
        return cls(range(1, len(types) + 1), types)

    @property
    def typing(self) -> dict:
        return dict(zip(self.elements, self.types))

    def type_of(self, e):
        return self.typing[e]

    def index(self, e) -> int:
        return self.elements.index(e)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self.elements

    def same_as_set(self, other: TypedFiniteSet) -> bool:
        return self.typing == other.typing

    def relabel(self, mapping) -> TypedFiniteSet:
        return TypedFiniteSet((mapping(e) for e in self.elements), self.types)

    def restrict(self, elements: Iterable) -> TypedFiniteSet:
        typing = self.typing
        elements = list(elements)
        for e in elements:
            if e not in typing:
                raise IndexOutOfRange(f"{e!r} is not an element of the basis")
        return TypedFiniteSet(elements, (typing[e] for e in elements))

    @staticmethod
    def oplus(*blocks: tuple[Hashable, TypedFiniteSet]) -> TypedFiniteSet:
        """Direct sum of ``(tag, set)`` blocks; elements become ``(tag, e)``."""
        elements, types = [], []
        for tag, s in blocks:
            elements += [(tag, e) for e in s.elements]
            types += s.types
        return TypedFiniteSet(elements, types)


@dataclass(frozen=True)
class SignedBox:
    """A box as a pair of typed sets: inputs (minus) and outputs (plus)."""

    minus: TypedFiniteSet
    plus: TypedFiniteSet

    @classmethod
    def of_types(cls, inputs: Iterable[str], outputs: Iterable[str]) -> SignedBox:
        return cls(TypedFiniteSet.of_types(inputs), TypedFiniteSet.of_types(outputs))


# -- spans ----------------------------------------------------------------------

@dataclass(frozen=True)
class Span:
    dom: TypedFiniteSet
    apex: TypedFiniteSet
    cod: TypedFiniteSet
    src: Mapping
    tgt: Mapping

    def __post_init__(self):
        dom_t, cod_t = self.dom.typing, self.cod.typing
        for w, t in zip(self.apex.elements, self.apex.types):
            if w not in self.src or w not in self.tgt:
                raise ValueError(f"leg undefined on wire {w!r}")
            if self.src[w] not in dom_t or self.tgt[w] not in cod_t:
                raise IndexOutOfRange(f"wire {w!r} attaches outside the span's feet")
            if dom_t[self.src[w]] != t or cod_t[self.tgt[w]] != t:
                raise TypeMismatch(f"wire {w!r} of type {t!r} joins ports of another type")

    @classmethod
    def from_wires(cls, dom: TypedFiniteSet, cod: TypedFiniteSet,
                   wires: Mapping[Hashable, tuple]) -> Span:
        """Build a span from ``{wire: (dom element, cod element)}``.

        Each wire takes the type of its domain element.
        """
        dom_t = dom.typing
        names = list(wires)
        for w in names:
            if wires[w][0] not in dom_t:
                raise IndexOutOfRange(f"wire {w!r} starts outside the domain")
        apex = TypedFiniteSet(names, (dom_t[wires[w][0]] for w in names))
        return cls(dom, apex, cod, {w: wires[w][0] for w in names},
                   {w: wires[w][1] for w in names})

    def wires(self) -> dict:
        return {w: (self.src[w], self.tgt[w]) for w in self.apex}

    def is_bijective(self) -> bool:
        return (len(self.apex) == len(self.dom) == len(self.cod)
                and len(set(self.src.values())) == len(self.dom)
                and len(set(self.tgt.values())) == len(self.cod))

    def attachment_counts(self) -> Counter:
        return Counter(zip((self.src[w] for w in self.apex), (self.tgt[w] for w in self.apex)))


# -- span matrices ----------------------------------------------------------------

class SpanMatrix:
    """Fully decomposed matrix of a span; cells are sets of wire names.

    Only non-empty cells are stored, keyed by ``(row, col)`` positions.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: TypedFiniteSet, cols: TypedFiniteSet,
                 entries: Mapping[tuple[int, int], Iterable] | None = None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], frozenset] = {}
        seen = set()
        for (i, j), cell in (entries or {}).items():
            if not (0 <= i < len(rows) and 0 <= j < len(cols)):
                raise IndexOutOfRange(f"cell {(i, j)} outside a {len(rows)}x{len(cols)} matrix")
            cell = frozenset(cell)
            if not cell:
                continue
            if rows.types[i] != cols.types[j]:
                raise TypeMismatch(f"cell {(i, j)} joins ports of different types")
            if seen & cell:
                raise DuplicateWire(f"wires {sorted(map(str, seen & cell))} appear twice")
            seen |= cell
            self.entries[(i, j)] = cell

    @classmethod
    def from_dense(cls, rows: TypedFiniteSet, cols: TypedFiniteSet,
                   cells: Sequence[Sequence[Iterable]]) -> SpanMatrix:
        return cls(rows, cols, {(i, j): c for i, row in enumerate(cells)
                                for j, c in enumerate(row)})

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, i: int, j: int) -> frozenset:
        return self.entries.get((i, j), frozenset())

    def dense(self) -> list[list[frozenset]]:
        return [[self.entry(i, j) for j in range(len(self.cols))] for i in range(len(self.rows))]

    def cardinalities(self) -> list[list[int]]:
        return [[len(c) for c in row] for row in self.dense()]

    def wires(self) -> set:
        return set().union(*self.entries.values()) if self.entries else set()

    def relabel(self, row_map=None, col_map=None) -> SpanMatrix:
        """Rename basis elements; cell positions are unchanged."""
        rows = self.rows.relabel(row_map) if row_map else self.rows
        cols = self.cols.relabel(col_map) if col_map else self.cols
        m = SpanMatrix(rows, cols)
        m.entries = dict(self.entries)
        return m

    def rename_wires(self, f) -> SpanMatrix:
        m = SpanMatrix(self.rows, self.cols)
        m.entries = {k: frozenset(f(w) for w in c) for k, c in self.entries.items()}
        return m

    def __eq__(self, other):
        if not isinstance(other, SpanMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return f"SpanMatrix({len(self.rows)}x{len(self.cols)}, {len(self.wires())} wires)"

    def __str__(self):
        return format_matrix(self)


def _cell_str(cell: frozenset) -> str:
    if not cell:
        return "0"
    return "{" + ",".join(sorted(wire_str(w) for w in cell)) + "}"


def _basis_str(e) -> str:
    if isinstance(e, tuple):
        return ".".join(str(x) for x in e)
    return str(e)


def format_matrix(m: SpanMatrix) -> str:
    """Plain-text dump: column basis header, then one row per row element."""
    table = [[""] + [_basis_str(e) for e in m.cols]]
    for i, e in enumerate(m.rows):
        table.append([_basis_str(e)] + [_cell_str(m.entry(i, j)) for j in range(len(m.cols))])
    widths = [max(len(r[k]) for r in table) for k in range(len(table[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines)


def span_to_matrix(s: Span) -> SpanMatrix:
    row = {e: i for i, e in enumerate(s.dom)}
    col = {e: j for j, e in enumerate(s.cod)}
    cells: dict[tuple[int, int], set] = {}
    for w in s.apex:
        cells.setdefault((row[s.src[w]], col[s.tgt[w]]), set()).add(w)
    return SpanMatrix(s.dom, s.cod, cells)


def matrix_to_span(m: SpanMatrix) -> Span:
    wires = {}
    for (i, j), cell in sorted(m.entries.items()):
        for w in sorted(cell, key=wire_str):
            if w in wires:
                raise DuplicateWire(f"wire {wire_str(w)} appears twice")
            wires[w] = (m.rows.elements[i], m.cols.elements[j])
    return Span.from_wires(m.rows, m.cols, wires)


def mat_mul(a: SpanMatrix, b: SpanMatrix) -> SpanMatrix:
    """Matrix product: cell (i, j) is the union over k of a(i, k) x b(k, j)."""
    if a.cols.types != b.rows.types:
        raise BasisMismatch(
            f"cannot multiply: column types {list(a.cols.types)} "
            f"!= row types {list(b.rows.types)}")
    by_row: dict[int, list] = {}
    for (k, j), cell in b.entries.items():
        by_row.setdefault(k, []).append((j, cell))
    cells: dict[tuple[int, int], set] = {}
    for (i, k), left in a.entries.items():
        for j, right in by_row.get(k, ()):
            cells.setdefault((i, j), set()).update(fuse(x, y) for x in left for y in right)
    return SpanMatrix(a.rows, b.cols, cells)


def mat_add(a: SpanMatrix, b: SpanMatrix) -> SpanMatrix:
    """Entrywise union. Clashing wire names are tagged 0 (left) and 1 (right)."""
    if a.rows != b.rows or a.cols != b.cols:
        raise BasisMismatch("cannot add matrices over different bases")
    if a.wires() & b.wires():
        a = a.rename_wires(lambda w: Tagged(0, w))
        b = b.rename_wires(lambda w: Tagged(1, w))
    cells = {k: set(c) for k, c in a.entries.items()}
    for k, c in b.entries.items():
        cells.setdefault(k, set()).update(c)
    return SpanMatrix(a.rows, a.cols, cells)


def zero(rows: TypedFiniteSet, cols: TypedFiniteSet) -> SpanMatrix:
    return SpanMatrix(rows, cols)


def identity(basis: TypedFiniteSet, names: Sequence | None = None) -> SpanMatrix:
    names = names if names is not None else [f"id{k}" for k in range(1, len(basis) + 1)]
    return SpanMatrix(basis, basis, {(k, k): {names[k]} for k in range(len(basis))})


def component(m: SpanMatrix, rows: Sequence, cols: Sequence) -> SpanMatrix:
    """Restrict to the given row and column basis elements (in that order)."""
    row_sub, col_sub = m.rows.restrict(rows), m.cols.restrict(cols)
    ri = {m.rows.index(e): n for n, e in enumerate(row_sub)}
    ci = {m.cols.index(e): n for n, e in enumerate(col_sub)}
    cells = {(ri[i], ci[j]): c for (i, j), c in m.entries.items() if i in ri and j in ci}
    return SpanMatrix(row_sub, col_sub, cells)


def embed(x: SpanMatrix, rows: Sequence, cols: Sequence,
          ambient_rows: TypedFiniteSet, ambient_cols: TypedFiniteSet) -> SpanMatrix:
    """Place ``x`` in the block ``rows x cols`` of an otherwise zero matrix."""
    rows, cols = list(rows), list(cols)
    if (len(rows), len(cols)) != x.shape:
        raise IndexOutOfRange(f"block {len(rows)}x{len(cols)} does not fit a {x.shape} matrix")
    sub_r, sub_c = ambient_rows.restrict(rows), ambient_cols.restrict(cols)
    if sub_r.types != x.rows.types or sub_c.types != x.cols.types:
        raise BasisMismatch("block types differ from the embedded matrix")
    ri = [ambient_rows.index(e) for e in rows]
    ci = [ambient_cols.index(e) for e in cols]
    return SpanMatrix(ambient_rows, ambient_cols,
                      {(ri[i], ci[j]): c for (i, j), c in x.entries.items()})


def span_iso(a, b) -> bool:
    """Whether two spans (or span matrices, or diagram spans) are isomorphic.

    Spans over the same feet are isomorphic exactly when every pair of
    feet elements is joined by the same number of wires.
    """
    if isinstance(a, WiringDiagramSpan) and isinstance(b, WiringDiagramSpan):
        return a.inner == b.inner and a.outer == b.outer and span_iso(a.span, b.span)
    if isinstance(a, SpanMatrix) and isinstance(b, SpanMatrix):
        return (a.rows == b.rows and a.cols == b.cols
                and {k: len(c) for k, c in a.entries.items()}
                == {k: len(c) for k, c in b.entries.items()})
    if isinstance(a, Span) and isinstance(b, Span):
        return (a.dom.same_as_set(b.dom) and a.cod.same_as_set(b.cod)
                and a.attachment_counts() == b.attachment_counts())
    raise TypeError(f"cannot compare {type(a).__name__} with {type(b).__name__}")


# -- wiring diagrams as spans -------------------------------------------------------

@dataclass(frozen=True)
class PartialOrder:
    """Strict order on inner boxes 1..n, stored as its transitive closure."""

    size: int
    pairs: frozenset = field(default_factory=frozenset)

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs

    def __bool__(self):
        return True


@dataclass(frozen=True)
class CycleError:
    """Witness that the box relation is not a partial order."""

    witness: tuple

    def __bool__(self):
        return False


def _order_from_relation(n: int, edges: set[tuple[int, int]]) -> PartialOrder | CycleError:
    succ = {k: sorted(j for i, j in edges if i == k) for k in range(1, n + 1)}
    closure = set()
    best = None
    for start in range(1, n + 1):
        # breadth-first, so the first edge back to start closes a shortest cycle
        parent = {start: None}
        frontier = [start]
        closing = None
        while frontier:
            nxt = []
            for u in frontier:
                for v in succ[u]:
                    if v == start and closing is None:
                        closing = u
                    if v not in parent:
                        parent[v] = u
                        nxt.append(v)
            frontier = nxt
        closure |= {(start, v) for v in parent if v != start}
        if closing is not None:
            closure.add((start, start))
            cycle = []
            u = closing
            while u is not None:
                cycle.append(u)
                u = parent[u]
            cycle.reverse()
            if best is None or len(cycle) < len(best):
                best = cycle
    if best is not None:
        i = best.index(min(best))
        return CycleError(tuple(best[i:] + best[:i]))
    return PartialOrder(n, frozenset(closure))


@dataclass(frozen=True)
class WiringDiagramSpan:
    """A wiring diagram as a span ``v- + t+ <- wires -> t- + v+``."""

    inner: tuple
    outer: SignedBox
    span: Span

    @staticmethod
    def feet(inner: Sequence[SignedBox], outer: SignedBox):
        dom = TypedFiniteSet.oplus((OUTER, outer.minus), *((k, b.plus) for k, b in enumerate(inner, 1)))
        cod = TypedFiniteSet.oplus(*((k, b.minus) for k, b in enumerate(inner, 1)), (OUTER, outer.plus))
        return dom, cod

    @classmethod
    def from_wires(cls, inner: Sequence[SignedBox], outer: SignedBox,
                   wires: Mapping[Hashable, tuple]) -> WiringDiagramSpan:
        inner = tuple(inner)
        dom, cod = cls.feet(inner, outer)
        return cls(inner, outer, Span.from_wires(dom, cod, wires))

    def matrix(self) -> SpanMatrix:
        return span_to_matrix(self.span)

    def reorder_boxes(self, order: Sequence[int]) -> WiringDiagramSpan:
        """Renumber inner boxes so that old box ``order[k-1]`` becomes box ``k``."""
        order = list(order)
        if sorted(order) != list(range(1, len(self.inner) + 1)):
            raise ValueError(f"{order} is not a permutation of the inner boxes")
        new = {old: k for k, old in enumerate(order, 1)}

        def move(e):
            return e if e[0] == OUTER else (new[e[0]], e[1])

        wires = {w: (move(s), move(t)) for w, (s, t) in self.span.wires().items()}
        return WiringDiagramSpan.from_wires([self.inner[k - 1] for k in order], self.outer, wires)


def progress_order(ws: WiringDiagramSpan) -> PartialOrder | CycleError:
    edges = {(s[0], t[0]) for s, t in ws.span.wires().values()
             if s[0] != OUTER and t[0] != OUTER}
    return _order_from_relation(len(ws.inner), edges)


def wd_to_span(d: WiringDiagram) -> WiringDiagramSpan:
    report = d.validate(STRICT)
    if not report.ok:
        raise NotStrict("; ".join(report.messages()))
    inner = [SignedBox.of_types(b.inputs, b.outputs) for b in d.boxes.values()]
    outer = SignedBox.of_types(d.input_types, d.output_types)

    def src(p: Port):
        return (OUTER, p.port) if p.box == INPUT_ID else (p.box - 2, p.port)

    def tgt(p: Port):
        return (OUTER, p.port) if p.box == OUTPUT_ID else (p.box - 2, p.port)

    wires = {n: (src(w.source), tgt(w.target)) for n, w in enumerate(d.wires, 1)}
    return WiringDiagramSpan.from_wires(inner, outer, wires)


def _types_of(s: TypedFiniteSet) -> tuple:
    if s.elements != tuple(range(1, len(s) + 1)):
        raise ValueError("diagram ports must be enumerated 1..n")
    return s.types


def span_to_wd(ws: WiringDiagramSpan, labels: Mapping[int, str] | None = None) -> WiringDiagram:
    """Encode a bijective diagram span as a strict wiring diagram."""
    order = progress_order(ws)
    if not order:
        raise ProgressViolation(f"boxes {list(order.witness)} form a cycle")
    if not ws.span.is_bijective():
        raise NotStrict("legs of the span are not bijections")
    labels = labels or {}
    d = WiringDiagram(_types_of(ws.outer.minus), _types_of(ws.outer.plus))
    for k, b in enumerate(ws.inner, 1):
        d.add_box(Box(labels.get(k, f"t{k}"), _types_of(b.minus), _types_of(b.plus)))

    def src(e):
        return (INPUT_ID, e[1]) if e[0] == OUTER else (e[0] + 2, e[1])

    def tgt(e):
        return (OUTPUT_ID, e[1]) if e[0] == OUTER else (e[0] + 2, e[1])

    for w in ws.span.apex:
        d.add_wire((src(ws.span.src[w]), tgt(ws.span.tgt[w])))
    return d


# -- operadic composition by block matrices ------------------------------------------

INCOMING, PASSING, UNTOUCHED, INTERNAL, OUTGOING = (
    "incoming", "passing", "untouched", "internal", "outgoing")


def compose_formula(psi: WiringDiagramSpan, i: int, phi: WiringDiagramSpan,
                    trace: dict | None = None) -> WiringDiagramSpan:
    """Substitute ``psi`` into inner box ``i`` (1-based) of ``phi``.

    The result's inner boxes are those of ``phi`` with box ``i`` replaced in
    place by the inner boxes of ``psi``. If ``trace`` is a dict it receives,
    per block of the composite, the set of resulting wire names.
    """
    n, m = len(phi.inner), len(psi.inner)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"box index {i} out of range 1..{n}")
    box = phi.inner[i - 1]
    if box.minus != psi.outer.minus or box.plus != psi.outer.plus:
        raise SignatureMismatch(f"outer box of the inner diagram differs from box {i}")
    for ws in (psi, phi):
        order = progress_order(ws)
        if not order:
            raise ProgressViolation(f"boxes {list(order.witness)} form a cycle")

    Phi, Psi = phi.matrix(), psi.matrix()
    if Phi.wires() & Psi.wires():
        Phi = Phi.rename_wires(lambda w: Tagged("outer", w))
        Psi = Psi.rename_wires(lambda w: Tagged("inner", w))

    u_minus = [e for e in Phi.rows if e[0] != i]
    u_plus = [e for e in Phi.cols if e[0] != i]
    ti_minus = [e for e in Phi.cols if e[0] == i]
    ti_plus = [e for e in Phi.rows if e[0] == i]
    v_minus = [e for e in Psi.rows if e[0] == OUTER]
    v_plus = [e for e in Psi.cols if e[0] == OUTER]
    s_plus = [e for e in Psi.rows if e[0] != OUTER]
    s_minus = [e for e in Psi.cols if e[0] != OUTER]

    into_box = component(Phi, u_minus, ti_minus)
    out_of_box = component(Phi, ti_plus, u_plus)
    blocks = {
        INCOMING: mat_mul(into_box, component(Psi, v_minus, s_minus)),
        UNTOUCHED: component(Phi, u_minus, u_plus),
        PASSING: mat_mul(mat_mul(into_box, component(Psi, v_minus, v_plus)), out_of_box),
        INTERNAL: component(Psi, s_plus, s_minus),
        OUTGOING: mat_mul(component(Psi, s_plus, v_plus), out_of_box),
    }

    def from_phi(e):
        if e[0] == OUTER:
            return e
        return (e[0], e[1]) if e[0] < i else (e[0] + m - 1, e[1])

    def from_psi(e):
        return (e[0] + i - 1, e[1])

    inner = phi.inner[:i - 1] + psi.inner + phi.inner[i:]
    dom, cod = WiringDiagramSpan.feet(inner, phi.outer)
    placement = {
        INCOMING: (from_phi, from_psi),
        UNTOUCHED: (from_phi, from_phi),
        PASSING: (from_phi, from_phi),
        INTERNAL: (from_psi, from_psi),
        OUTGOING: (from_psi, from_phi),
    }
    result = zero(dom, cod)
    for case, block in blocks.items():
        rmap, cmap = placement[case]
        result = mat_add(result, embed(block, map(rmap, block.rows), map(cmap, block.cols), dom, cod))
        if trace is not None:
            trace[case] = block.wires()

    out = WiringDiagramSpan(inner, phi.outer, matrix_to_span(result))
    order = progress_order(out)
    if not order:
        raise ProgressViolation(f"composite has cycle {list(order.witness)}")
    return out


# -- generators -------------------------------------------------------------------

WireSpec = Sequence[tuple[Hashable, str]]


def _names_types(ws: WireSpec):
    names = [n for n, _ in ws]
    types = [t for _, t in ws]
    return names, types


def sym_gen(wires: WireSpec, sigma: Sequence[int] | None = None) -> WiringDiagramSpan:
    """0-ary diagram on outer box (w, w) permuting the wires by ``sigma``.

    Wire ``k`` runs from outer input ``k`` to outer output ``sigma[k-1]``;
    the identity permutation gives the unit.
    """
    names, types = _names_types(wires)
    sigma = list(sigma) if sigma is not None else list(range(1, len(names) + 1))
    if sorted(sigma) != list(range(1, len(names) + 1)):
        raise ValueError(f"{sigma} is not a permutation")
    out_types = [None] * len(types)
    for k, s in enumerate(sigma):
        out_types[s - 1] = types[k]
    outer = SignedBox.of_types(types, out_types)
    return WiringDiagramSpan.from_wires(
        [], outer, {w: ((OUTER, k), (OUTER, s)) for k, (w, s) in enumerate(zip(names, sigma), 1)})


def seq_gen(first: WireSpec, middle: WireSpec, last: WireSpec) -> WiringDiagramSpan:
    """Two boxes in series: ``first`` enters box 1, ``middle`` joins 1 to 2,
    ``last`` leaves box 2."""
    a, ta = _names_types(first)
    b, tb = _names_types(middle)
    c, tc = _names_types(last)
    inner = [SignedBox.of_types(ta, tb), SignedBox.of_types(tb, tc)]
    outer = SignedBox.of_types(ta, tc)
    wires = {}
    wires.update({w: ((OUTER, k), (1, k)) for k, w in enumerate(a, 1)})
    wires.update({w: ((1, k), (2, k)) for k, w in enumerate(b, 1)})
    wires.update({w: ((2, k), (OUTER, k)) for k, w in enumerate(c, 1)})
    if len(wires) != len(a) + len(b) + len(c):
        raise ValueError("wire names must be distinct")
    return WiringDiagramSpan.from_wires(inner, outer, wires)


def para_gen(rows: Sequence[tuple[WireSpec, WireSpec]]) -> WiringDiagramSpan:
    """Boxes side by side; row ``k`` gives box ``k``'s input and output wires."""
    inner, wires = [], {}
    in_types, out_types = [], []
    for k, (ins, outs) in enumerate(rows, 1):
        a, ta = _names_types(ins)
        b, tb = _names_types(outs)
        inner.append(SignedBox.of_types(ta, tb))
        wires.update({w: ((OUTER, len(in_types) + p), (k, p)) for p, w in enumerate(a, 1)})
        wires.update({w: ((k, p), (OUTER, len(out_types) + p)) for p, w in enumerate(b, 1)})
        in_types += ta
        out_types += tb
    return WiringDiagramSpan.from_wires(inner, SignedBox.of_types(in_types, out_types), wires)


def inert_span(box: SignedBox, names: Sequence | None = None) -> WiringDiagramSpan:
    """Identity diagram on ``box``: one inner copy wired straight through."""
    k, l = len(box.minus), len(box.plus)
    names = list(names) if names is not None else list(range(1, k + l + 1))
    wires = {names[p]: ((OUTER, e), (1, e)) for p, e in enumerate(box.minus)}
    wires.update({names[k + p]: ((1, e), (OUTER, e)) for p, e in enumerate(box.plus)})
    return WiringDiagramSpan.from_wires([box], box, wires)


def box_of(b: Box) -> SignedBox:
    return SignedBox.of_types(b.inputs, b.outputs)
