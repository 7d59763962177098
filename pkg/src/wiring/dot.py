"""Graphviz export.

>>> from wiring.smc import generator
>>> d = (generator("f", ["x"], ["y"]) >> generator("g", ["y"], ["z"])).diagram
>>> print(export_dot(d))  # doctest: +ELLIPSIS
digraph wiring {
  rankdir=LR;
  node [shape=record];
  subgraph cluster_boundary {
    label="boundary";
    n1 [label="in|{<o1> x}"];
    n2 [label="{<i1> z}|out"];
  }
  n3 [label="{<i1> x}|f|{<o1> y}"];
  n4 [label="{<i1> y}|g|{<o1> z}"];
  n1:o1 -> n3:i1 [label="x"];
  n3:o1 -> n4:i1 [label="y"];
  n4:o1 -> n2:i1 [label="z"];
}
"""
from __future__ import annotations

from .diagram import INPUT_ID, OUTPUT_ID, WiringDiagram

_RECORD_SPECIAL = set('{}|<>"\\')


def _escape(text) -> str:
    return "".join("\\" + c if c in _RECORD_SPECIAL else c for c in str(text))


def _ports(prefix: str, types) -> str:
    return "{" + "|".join(f"<{prefix}{k}> {_escape(t)}" for k, t in enumerate(types, 1)) + "}"


def export_dot(d: WiringDiagram) -> str:
    """Deterministic DOT text: nodes by id, edges in wire order."""
    lines = ["digraph wiring {", "  rankdir=LR;", "  node [shape=record];",
             "  subgraph cluster_boundary {", '    label="boundary";']
    inputs = "in" + ("|" + _ports("o", d.input_types) if d.input_types else "")
    outputs = (_ports("i", d.output_types) + "|" if d.output_types else "") + "out"
    lines.append(f'    n{INPUT_ID} [label="{inputs}"];')
    lines.append(f'    n{OUTPUT_ID} [label="{outputs}"];')
    lines.append("  }")
    for v, box in d.boxes.items():
        parts = [_ports("i", box.inputs)] if box.inputs else []
        parts.append(_escape(box.value))
        if box.outputs:
            parts.append(_ports("o", box.outputs))
        lines.append(f'  n{v} [label="{"|".join(parts)}"];')
    for w in d.wires:
        (sb, sp), (tb, tp) = w
        t = d.source_type(w.source).replace('"', '\\"')
        lines.append(f'  n{sb}:o{sp} -> n{tb}:i{tp} [label="{t}"];')
    lines.append("}")
    return "\n".join(lines)
