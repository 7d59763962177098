"""Wiring diagrams as boxes and wires on top of a simple directed graph.

Vertex 1 stands for the outer box's inputs and vertex 2 for its outputs;
inner boxes are numbered consecutively from 3. A wire runs from an output
port to an input port, where vertex 1 exposes the outer inputs as source
ports and vertex 2 exposes the outer outputs as target ports:

>>> d = WiringDiagram(["x"], ["z"])
>>> f = d.add_box(Box("f", ["x"], ["y"]))
>>> g = d.add_box(Box("g", ["y"], ["z"]))
>>> d.add_wires([((1, 1), (f, 1)), ((f, 1), (g, 1)), ((g, 1), (2, 1))])
>>> sorted(d.out_neighbors(f)), sorted(d.in_neighbors(2))
([4], [4])
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

INPUT_ID = 1
OUTPUT_ID = 2
STRICT = "strict"
GENERAL = "general"
MODES = (STRICT, GENERAL)


class DiagramError(Exception):
    """Base class for errors raised by wiring diagram operations."""


class TypeMismatch(DiagramError):
    pass


class PortOccupied(DiagramError):
    pass


class DanglingRef(DiagramError):
    pass


class CycleCreated(DiagramError):
    pass


class InvalidDiagram(DiagramError):
    """Raised when a deserialized diagram fails validation."""

    def __init__(self, report: ValidationReport):
        super().__init__("invalid diagram: " + "; ".join(report.messages()))
        self.report = report


class Port(NamedTuple):
    """A port reference: vertex id and 1-based port index."""

    box: int
    port: int


class Wire(NamedTuple):
    source: Port
    target: Port

    @classmethod
    def make(cls, source, target) -> Wire:
        return cls(Port(*source), Port(*target))

    def __repr__(self):
        return f"Wire({tuple(self.source)} => {tuple(self.target)})"


@dataclass(frozen=True)
class Box:
    """A labeled box with ordered input and output port types."""

    value: str
    inputs: tuple[str, ...] = ()
    outputs: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))

    @property
    def signature(self) -> tuple:
        return (self.value, self.inputs, self.outputs)


def _check_types(types: Iterable[str]) -> tuple[str, ...]:
    types = tuple(types)
    for t in types:
        if not isinstance(t, str) or not t:
            raise ValueError(f"port type must be a non-empty string, got {t!r}")
    return types


@dataclass
class ValidationReport:
    mode: str
    type_mismatches: list[Wire] = field(default_factory=list)
    dangling: list[Wire] = field(default_factory=list)
    desync: list[tuple[int, int]] = field(default_factory=list)
    cycle: list[int] | None = None
    occupancy: list[tuple[str, Port, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.type_mismatches or self.dangling or self.desync
                    or self.cycle or self.occupancy)

    def messages(self) -> list[str]:
        out = [f"type mismatch on {w!r}" for w in self.type_mismatches]
        out += [f"dangling reference in {w!r}" for w in self.dangling]
        out += [f"digraph edge {e} out of sync with wires" for e in self.desync]
        if self.cycle:
            out.append(f"progress condition violated by cycle {self.cycle}")
        out += [f"{role} port {tuple(p)} has {n} wires" for role, p, n in self.occupancy]
        return out

    def to_dict(self) -> dict:
        return {
            "valid": self.ok,
            "mode": self.mode,
            "type_mismatches": [[list(w.source), list(w.target)] for w in self.type_mismatches],
            "dangling": [[list(w.source), list(w.target)] for w in self.dangling],
            "desync": [list(e) for e in self.desync],
            "cycle": self.cycle,
            "occupancy": [
                {"role": role, "port": list(p), "wires": n} for role, p, n in self.occupancy
            ],
        }


class WiringDiagram:
    """A wiring diagram with an outer box, inner boxes and wires.

    In ``strict`` mode every port carries exactly one wire once the diagram
    is complete, a port may never receive a second wire, and wires that
    would close a directed cycle among inner boxes are refused on insertion.
    In ``general`` mode ports may carry any number of wires and acyclicity
    is only checked by :meth:`validate`.
    """

    def __init__(self, inputs: Iterable[str] = (), outputs: Iterable[str] = (),
                 mode: str = STRICT):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.input_types = _check_types(inputs)
        self.output_types = _check_types(outputs)
        self.mode = mode
        self._boxes: list[Box] = []
        self._wires: list[Wire] = []
        # edge multiplicities of the underlying simple digraph
        self._succ: dict[int, Counter] = {INPUT_ID: Counter(), OUTPUT_ID: Counter()}
        self._pred: dict[int, Counter] = {INPUT_ID: Counter(), OUTPUT_ID: Counter()}

    # -- accessors -----------------------------------------------------------

    @property
    def input_id(self) -> int:
        return INPUT_ID

    @property
    def output_id(self) -> int:
        return OUTPUT_ID

    def __len__(self) -> int:
        return len(self._boxes)

    def box_ids(self) -> range:
        return range(3, len(self._boxes) + 3)

    def vertices(self) -> range:
        return range(1, len(self._boxes) + 3)

    def box(self, v: int) -> Box:
        if v not in self.box_ids():
            raise DanglingRef(f"no inner box with id {v}")
        return self._boxes[v - 3]

    @property
    def boxes(self) -> dict[int, Box]:
        return {v: b for v, b in zip(self.box_ids(), self._boxes)}

    @property
    def wires(self) -> list[Wire]:
        return list(self._wires)

    def edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u, succ in self._succ.items() for v in succ}

    def out_neighbors(self, v: int) -> set[int]:
        self._require_vertex(v)
        return set(self._succ[v])

    def in_neighbors(self, v: int) -> set[int]:
        self._require_vertex(v)
        return set(self._pred[v])

    def neighbors(self, v: int, direction: str = "out") -> set[int]:
        if direction == "out":
            return self.out_neighbors(v)
        if direction == "in":
            return self.in_neighbors(v)
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")

    def in_wires(self, port: Port | tuple[int, int]) -> list[Wire]:
        """Wires whose target is the given port."""
        port = Port(*port)
        return [w for w in self._wires if w.target == port]

    def out_wires(self, port: Port | tuple[int, int]) -> list[Wire]:
        """Wires whose source is the given port."""
        port = Port(*port)
        return [w for w in self._wires if w.source == port]

    def source_type(self, port: Port) -> str:
        """Type of a source port; raises DanglingRef if it does not exist."""
        box, i = port
        if box == INPUT_ID:
            types = self.input_types
        elif box in self.box_ids():
            types = self._boxes[box - 3].outputs
        else:
            raise DanglingRef(f"{tuple(port)} is not a source port")
        if not 1 <= i <= len(types):
            raise DanglingRef(f"{tuple(port)} is not a source port")
        return types[i - 1]

    def target_type(self, port: Port) -> str:
        box, i = port
        if box == OUTPUT_ID:
            types = self.output_types
        elif box in self.box_ids():
            types = self._boxes[box - 3].inputs
        else:
            raise DanglingRef(f"{tuple(port)} is not a target port")
        if not 1 <= i <= len(types):
            raise DanglingRef(f"{tuple(port)} is not a target port")
        return types[i - 1]

    def source_ports(self) -> list[Port]:
        ports = [Port(INPUT_ID, i) for i in range(1, len(self.input_types) + 1)]
        for v, b in self.boxes.items():
            ports += [Port(v, i) for i in range(1, len(b.outputs) + 1)]
        return ports

    def target_ports(self) -> list[Port]:
        ports = []
        for v, b in self.boxes.items():
            ports += [Port(v, i) for i in range(1, len(b.inputs) + 1)]
        ports += [Port(OUTPUT_ID, i) for i in range(1, len(self.output_types) + 1)]
        return ports

    # -- mutation ------------------------------------------------------------

    def add_box(self, box: Box) -> int:
        self._boxes.append(box)
        v = len(self._boxes) + 2
        self._succ[v] = Counter()
        self._pred[v] = Counter()
        return v

    def add_boxes(self, boxes: Iterable[Box]) -> list[int]:
        return [self.add_box(b) for b in boxes]

    def add_wire(self, wire) -> None:
        if not isinstance(wire, Wire):
            wire = Wire.make(*wire)
        src, tgt = wire
        if self.source_type(src) != self.target_type(tgt):
            raise TypeMismatch(
                f"{wire!r}: source type {self.source_type(src)!r} "
                f"!= target type {self.target_type(tgt)!r}")
        if self.mode == STRICT:
            if self.out_wires(src):
                raise PortOccupied(f"source port {tuple(src)} already has a wire")
            if self.in_wires(tgt):
                raise PortOccupied(f"target port {tuple(tgt)} already has a wire")
            u, v = src.box, tgt.box
            if u >= 3 and v >= 3 and (u == v or self._reaches(v, u)):
                raise CycleCreated(f"{wire!r} closes a cycle through box {u}")
        self._wires.append(wire)
        self._succ[src.box][tgt.box] += 1
        self._pred[tgt.box][src.box] += 1

    def add_wires(self, wires: Iterable) -> None:
        for w in wires:
            self.add_wire(w)

    def remove_wire(self, wire) -> None:
        if not isinstance(wire, Wire):
            wire = Wire.make(*wire)
        self._wires.remove(wire)
        u, v = wire.source.box, wire.target.box
        self._succ[u][v] -= 1
        self._pred[v][u] -= 1
        if not self._succ[u][v]:
            del self._succ[u][v]
            del self._pred[v][u]

    def remove_boxes(self, ids: Iterable[int]) -> WiringDiagram:
        """Delete boxes and their wires in place, compacting the numbering.

        Surviving boxes keep their relative order. Returns ``self``.
        """
        ids = set(ids)
        for v in ids:
            if v not in self.box_ids():
                raise DanglingRef(f"cannot remove vertex {v}")
        if not ids:
            return self
        renumber = {INPUT_ID: INPUT_ID, OUTPUT_ID: OUTPUT_ID}
        kept = []
        for v, b in self.boxes.items():
            if v not in ids:
                kept.append(b)
                renumber[v] = len(kept) + 2
        wires = [
            Wire(Port(renumber[w.source.box], w.source.port),
                 Port(renumber[w.target.box], w.target.port))
            for w in self._wires
            if w.source.box not in ids and w.target.box not in ids
        ]
        self._boxes = kept
        self._wires = wires
        self._rebuild_graph()
        return self

    def _rebuild_graph(self) -> None:
        self._succ, self._pred = self._graph_from_wires()

    def _graph_from_wires(self):
        succ = {v: Counter() for v in self.vertices()}
        pred = {v: Counter() for v in self.vertices()}
        for src, tgt in self._wires:
            succ.setdefault(src.box, Counter())[tgt.box] += 1
            pred.setdefault(tgt.box, Counter())[src.box] += 1
        return succ, pred

    def copy(self, mode: str | None = None) -> WiringDiagram:
        d = WiringDiagram.__new__(WiringDiagram)
        d.input_types = self.input_types
        d.output_types = self.output_types
        d.mode = mode or self.mode
        d._boxes = list(self._boxes)
        d._wires = list(self._wires)
        d._succ = {v: Counter(c) for v, c in self._succ.items()}
        d._pred = {v: Counter(c) for v, c in self._pred.items()}
        return d

    # -- graph queries -------------------------------------------------------

    def _require_vertex(self, v: int) -> None:
        if v not in self.vertices():
            raise DanglingRef(f"no vertex with id {v}")

    def _reaches(self, start: int, goal: int) -> bool:
        """Whether ``goal`` is reachable from ``start`` through inner boxes."""
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            if u == goal:
                return True
            for v in self._succ.get(u, ()):
                if v >= 3 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    def find_cycle(self) -> list[int] | None:
        """A shortest directed cycle among inner boxes, or None.

        The witness starts at its smallest vertex id.
        """
        best = None
        for start in self.box_ids():
            parent = {start: None}
            queue = deque([start])
            closing = None
            while queue and closing is None:
                u = queue.popleft()
                for v in self._succ[u]:
                    if v == start:
                        closing = u
                        break
                    if v >= 3 and v not in parent:
                        parent[v] = u
                        queue.append(v)
            if closing is None:
                continue
            cycle = []
            u = closing
            while u is not None:
                cycle.append(u)
                u = parent[u]
            cycle.reverse()
            if best is None or len(cycle) < len(best):
                best = cycle
        if best is None:
            return None
        i = best.index(min(best))
        return best[i:] + best[:i]

    def topological_order(self) -> list[int]:
        """Inner boxes in a topological order (smallest id first on ties)."""
        import heapq

        indeg = {v: sum(1 for u in self._pred[v] if u >= 3) for v in self.box_ids()}
        heap = [v for v, n in indeg.items() if n == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            for v in self._succ[u]:
                if v >= 3:
                    indeg[v] -= 1
                    if indeg[v] == 0:
                        heapq.heappush(heap, v)
        if len(order) != len(self._boxes):
            raise CycleCreated(f"diagram has a cycle {self.find_cycle()}")
        return order

    # -- validation ----------------------------------------------------------

    def validate(self, mode: str | None = None) -> ValidationReport:
        mode = mode or self.mode
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        report = ValidationReport(mode)
        for w in self._wires:
            try:
                s, t = self.source_type(w.source), self.target_type(w.target)
            except DanglingRef:
                report.dangling.append(w)
                continue
            if s != t:
                report.type_mismatches.append(w)
        succ, _ = self._graph_from_wires()
        stored = self.edges()
        actual = {(u, v) for u, c in succ.items() for v in c}
        report.desync = sorted(stored ^ actual)
        report.cycle = self.find_cycle()
        if mode == STRICT:
            out_count = Counter(w.source for w in self._wires)
            in_count = Counter(w.target for w in self._wires)
            for p in self.source_ports():
                if out_count[p] != 1:
                    report.occupancy.append(("source", p, out_count[p]))
            for p in self.target_ports():
                if in_count[p] != 1:
                    report.occupancy.append(("target", p, in_count[p]))
        return report

    def is_valid(self, mode: str | None = None) -> bool:
        return self.validate(mode).ok

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "inputs": list(self.input_types),
            "outputs": list(self.output_types),
            "boxes": [
                {"id": v, "value": b.value, "inputs": list(b.inputs), "outputs": list(b.outputs)}
                for v, b in self.boxes.items()
            ],
            "wires": [{"src": list(w.source), "tgt": list(w.target)} for w in self._wires],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, mode: str = STRICT, check: bool = True) -> WiringDiagram:
        """Load a diagram; with ``check`` an invalid one raises InvalidDiagram."""
        d = cls(data["inputs"], data["outputs"], mode=mode)
        for expected, b in enumerate(data["boxes"], start=3):
            if b["id"] != expected:
                raise DanglingRef(f"box ids must run consecutively from 3, got {b['id']}")
            d.add_box(Box(b["value"], b["inputs"], b["outputs"]))
        # load wires unchecked so the report can name every problem at once
        d._wires = [Wire.make(w["src"], w["tgt"]) for w in data["wires"]]
        for src, tgt in d._wires:
            d._succ.setdefault(src.box, Counter())[tgt.box] += 1
            d._pred.setdefault(tgt.box, Counter())[src.box] += 1
        if check:
            report = d.validate()
            if not report.ok:
                raise InvalidDiagram(report)
        return d

    @classmethod
    def from_json(cls, text: str, mode: str = STRICT) -> WiringDiagram:
        return cls.from_dict(json.loads(text), mode=mode)

    def __repr__(self):
        boxes = ", ".join(f"{v} => {b.value}" for v, b in self.boxes.items())
        return (f"WiringDiagram({list(self.input_types)}, {list(self.output_types)}, "
                f"[{boxes}], {self._wires})")


def new_diagram(inputs: Iterable[str], outputs: Iterable[str],
                mode: str = STRICT) -> WiringDiagram:
    return WiringDiagram(inputs, outputs, mode=mode)
