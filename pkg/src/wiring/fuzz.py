"""Random strict wiring diagrams for property tests and the oracle command."""
from __future__ import annotations

import random
from typing import Sequence

from .diagram import INPUT_ID, OUTPUT_ID, Box, WiringDiagram

TYPES = ("a", "b", "c", "d")
LABELS = ("f", "g", "h", "k")


class Rejected(Exception):
    pass


def random_diagram(rng: random.Random, n_boxes: int, *, types: Sequence[str] = TYPES,
                   labels: Sequence[str] = LABELS, max_ports: int = 3,
                   forced: Sequence[Box] = (), max_outer: int | None = None,
                   reuse: float = 0.75, tries: int = 200):
    """A random strict diagram with ``n_boxes`` random boxes plus ``forced`` ones.

    Boxes are wired in a random topological order: each input port takes an
    open output of the right type when one exists (with probability
    ``reuse``) and otherwise becomes a fresh outer input. Outputs left open
    become the outer outputs. Returns ``(diagram, forced_ids)``.
    """
    for _ in range(tries):
        try:
            return _attempt(rng, n_boxes, types, labels, max_ports, forced, max_outer, reuse)
        except Rejected:
            continue
    raise RuntimeError("could not meet the outer port bound")


def _attempt(rng, n_boxes, types, labels, max_ports, forced, max_outer, reuse):
    specs = [None] * n_boxes + list(forced)
    rng.shuffle(specs)  # position in this list is the topological order
    n = len(specs)
    ids = list(range(3, n + 3))
    rng.shuffle(ids)

    outer_in: list[str] = []
    pool: list[tuple[tuple[int, int], str]] = []
    for _ in range(rng.randint(0, 1)):
        t = rng.choice(types)
        outer_in.append(t)
        pool.append(((INPUT_ID, len(outer_in)), t))
    boxes: dict[int, Box] = {}
    wires = []
    forced_ids = {}
    for spec, v in zip(specs, ids):
        if spec is None:
            k = rng.randint(0, max_ports)
            in_types = [None] * k
        else:
            in_types = list(spec.inputs)
        for p, t in enumerate(in_types, 1):
            matching = [i for i, (_, pt) in enumerate(pool) if t is None or pt == t]
            if matching and rng.random() < reuse:
                src, t = pool.pop(rng.choice(matching))
            else:
                t = t or rng.choice(types)
                outer_in.append(t)
                src = (INPUT_ID, len(outer_in))
            in_types[p - 1] = t
            wires.append((src, (v, p)))
        if spec is None:
            out_types = [rng.choice(types) for _ in range(rng.randint(0, max_ports))]
            boxes[v] = Box(rng.choice(labels), in_types, out_types)
        else:
            boxes[v] = spec
            forced_ids[id(spec)] = v
        pool += [((v, p), t) for p, t in enumerate(boxes[v].outputs, 1)]

    if max_outer is not None and (len(outer_in) > max_outer or len(pool) > max_outer):
        raise Rejected
    rng.shuffle(pool)
    perm = list(range(1, len(outer_in) + 1))
    rng.shuffle(perm)  # old outer input k becomes perm[k-1]
    inputs = [None] * len(outer_in)
    for k, t in enumerate(outer_in):
        inputs[perm[k] - 1] = t

    d = WiringDiagram(inputs, [t for _, t in pool])
    for v in range(3, n + 3):
        d.add_box(boxes[v])

    def move(src):
        return (INPUT_ID, perm[src[1] - 1]) if src[0] == INPUT_ID else src

    all_wires = [(move(s), t) for s, t in wires]
    all_wires += [(move(s), (OUTPUT_ID, k)) for k, (s, _) in enumerate(pool, 1)]
    rng.shuffle(all_wires)
    d.add_wires(all_wires)
    return d, [forced_ids[id(b)] for b in forced]


def random_host_and_sub(rng: random.Random, host_max: int = 5, sub_max: int = 4,
                        max_ports: int = 3):
    """A diagram to substitute and a host with a box of matching signature.

    Returns ``(host, box_id, sub)``.
    """
    sub, _ = random_diagram(rng, rng.randint(0, sub_max), max_ports=max_ports,
                            max_outer=max_ports)
    box = Box(rng.choice(LABELS), sub.input_types, sub.output_types)
    host, (v,) = random_diagram(rng, rng.randint(0, host_max - 1), max_ports=max_ports,
                                forced=[box])
    return host, v, sub


def random_nest(rng: random.Random, max_boxes: int = 3, max_ports: int = 3):
    """Three diagrams ``f, g, h`` with ``g`` fitting box ``i`` of ``f`` and ``h``
    fitting box ``j`` of ``g``. Returns ``(f, i, g, j, h)``."""
    h, _ = random_diagram(rng, rng.randint(0, max_boxes), max_ports=max_ports,
                          max_outer=max_ports)
    g, (j,) = random_diagram(rng, rng.randint(0, max_boxes - 1), max_ports=max_ports,
                             forced=[Box(rng.choice(LABELS), h.input_types, h.output_types)],
                             max_outer=max_ports)
    f, (i,) = random_diagram(rng, rng.randint(0, max_boxes - 1), max_ports=max_ports,
                             forced=[Box(rng.choice(LABELS), g.input_types, g.output_types)])
    return f, i, g, j, h
