import random

from wiring.diagram import Box, WiringDiagram


def fg_diagram() -> WiringDiagram:
    d = WiringDiagram(["x"], ["z"])
    d.add_box(Box("f", ["x"], ["y"]))
    d.add_box(Box("g", ["y"], ["z"]))
    d.add_wires([((1, 1), (3, 1)), ((3, 1), (4, 1)), ((4, 1), (2, 1))])
    return d


def shuffled(d: WiringDiagram, rng: random.Random) -> tuple[WiringDiagram, dict]:
    """Same diagram with inner boxes renumbered and wires reordered."""
    ids = list(d.box_ids())
    perm = ids[:]
    rng.shuffle(perm)
    new = dict(zip(ids, perm))
    new[1], new[2] = 1, 2
    out = WiringDiagram(d.input_types, d.output_types, mode=d.mode)
    inverse = {v: k for k, v in new.items()}
    for v in sorted(perm):
        out.add_box(d.box(inverse[v]))
    wires = [((new[s.box], s.port), (new[t.box], t.port)) for s, t in d.wires]
    rng.shuffle(wires)
    out.add_wires(wires)
    return out, {k: v for k, v in new.items() if k > 2}
