"""Operadic composition of wiring diagrams by substitution."""
from __future__ import annotations

from typing import Mapping, Sequence

from .diagram import (
    GENERAL, INPUT_ID, OUTPUT_ID, Box, DanglingRef, DiagramError, Port, Wire,
    WiringDiagram,
)


class SignatureMismatch(DiagramError):
    pass


# Case tags for wires produced by substitution, in the order they are handled.
PASSING, INCOMING, OUTGOING, INTERNAL = "passing", "incoming", "outgoing", "internal"


def inert(box: Box) -> WiringDiagram:
    """The identity diagram on a box: one copy of the box wired straight through."""
    d = WiringDiagram(box.inputs, box.outputs)
    v = d.add_box(box)
    d.add_wires(((INPUT_ID, i), (v, i)) for i in range(1, len(box.inputs) + 1))
    d.add_wires(((v, i), (OUTPUT_ID, i)) for i in range(1, len(box.outputs) + 1))
    return d


def substitute(d: WiringDiagram, targets: Mapping[int, WiringDiagram],
               trace: list | None = None) -> WiringDiagram:
    """Substitute diagrams for one or more inner boxes of ``d`` simultaneously.

    ``targets`` maps box ids of ``d`` to diagrams whose outer signature
    equals the replaced box's. Inputs are left untouched. Boxes of ``d`` that
    survive keep their order and come first, followed by the boxes of each
    substituted diagram in increasing target id.

    If ``trace`` is a list, one ``(case, new_wire)`` pair is appended for each
    wire created while extending the substituted wires.
    """
    for v, sub in targets.items():
        box = d.box(v)
        if tuple(sub.input_types) != box.inputs or tuple(sub.output_types) != box.outputs:
            raise SignatureMismatch(
                f"box {v} has signature {list(box.inputs)} -> {list(box.outputs)}, "
                f"diagram has {list(sub.input_types)} -> {list(sub.output_types)}")

    result = d.copy(mode=GENERAL)
    order = sorted(targets)
    offsets = {}
    for v in order:
        offsets[v] = len(result)  # sub box k lands at id k + offset
        result.add_boxes(targets[v].boxes.values())
    for v in order:
        _substitute_wires(result, v, targets[v], offsets[v], trace)
    result.remove_boxes(order)
    result.mode = d.mode
    return result


def _substitute_wires(d: WiringDiagram, v: int, sub: WiringDiagram, offset: int,
                      trace: list | None) -> None:
    def relocate(port: Port) -> Port:
        return Port(port.box + offset, port.port)

    def add(case, src, tgt):
        wire = Wire(src, tgt)
        d.add_wire(wire)
        if trace is not None:
            trace.append((case, wire))

    for wire in sub.wires:
        src, tgt = wire
        from_outer = src.box == INPUT_ID
        to_outer = tgt.box == OUTPUT_ID
        if from_outer and to_outer:
            for in_wire in d.in_wires((v, src.port)):
                for out_wire in d.out_wires((v, tgt.port)):
                    add(PASSING, in_wire.source, out_wire.target)
        elif from_outer:
            for in_wire in d.in_wires((v, src.port)):
                add(INCOMING, in_wire.source, relocate(tgt))
        elif to_outer:
            for out_wire in d.out_wires((v, tgt.port)):
                add(OUTGOING, relocate(src), out_wire.target)
        else:
            add(INTERNAL, relocate(src), relocate(tgt))


def ocompose(f: WiringDiagram, gs: Sequence[WiringDiagram]) -> WiringDiagram:
    """Full composition: substitute ``gs[k]`` into the k-th inner box of ``f``."""
    if len(gs) != len(f):
        raise SignatureMismatch(f"expected {len(f)} diagrams, got {len(gs)}")
    return substitute(f, {v: g for v, g in zip(f.box_ids(), gs)})


def ocompose_at(f: WiringDiagram, i: int, g: WiringDiagram) -> WiringDiagram:
    """Partial composition at the i-th inner box (1-based, so vertex ``i + 2``)."""
    if not 1 <= i <= len(f):
        raise DanglingRef(f"box index {i} out of range 1..{len(f)}")
    return substitute(f, {i + 2: g})
