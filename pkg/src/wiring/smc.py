"""Free symmetric monoidal category whose morphisms are wiring diagrams.

Objects are lists of type names; ``compose`` and ``otimes`` build a generic
two-box diagram and fill its boxes by operadic composition.

>>> f = generator("f", ["x"], ["y"])
>>> g = generator("g", ["y"], ["z"])
>>> h = f >> g
>>> h.dom, h.cod, [b.value for b in h.diagram.boxes.values()]
(('x',), ('z',), ['f', 'g'])
"""
from __future__ import annotations

from typing import Sequence

from .diagram import INPUT_ID, OUTPUT_ID, Box, DiagramError, WiringDiagram
from .operad import substitute


class CompositionMismatch(DiagramError):
    pass


class BadPermutation(DiagramError):
    pass


class Morphism:
    """A morphism of the free SMC, held as a strict wiring diagram."""

    __slots__ = ("diagram",)

    def __init__(self, diagram: WiringDiagram):
        self.diagram = diagram

    @property
    def dom(self) -> tuple[str, ...]:
        return self.diagram.input_types

    @property
    def cod(self) -> tuple[str, ...]:
        return self.diagram.output_types

    def __rshift__(self, other: Morphism) -> Morphism:
        return compose(self, other)

    def __matmul__(self, other: Morphism) -> Morphism:
        return otimes(self, other)

    def __eq__(self, other):
        # equality of the free SMC, decided on the underlying diagrams
        from .equality import is_equal

        if not isinstance(other, Morphism):
            return NotImplemented
        return is_equal(self.diagram, other.diagram)

    __hash__ = None

    def __repr__(self):
        return f"Morphism({list(self.dom)} -> {list(self.cod)}, {len(self.diagram)} boxes)"


def generator(name: str, dom: Sequence[str], cod: Sequence[str]) -> Morphism:
    box = Box(name, dom, cod)
    d = WiringDiagram(dom, cod)
    v = d.add_box(box)
    d.add_wires(((INPUT_ID, i), (v, i)) for i in range(1, len(dom) + 1))
    d.add_wires(((v, i), (OUTPUT_ID, i)) for i in range(1, len(cod) + 1))
    return Morphism(d)


def id(types: Sequence[str]) -> Morphism:  # noqa: A001 - mirrors the categorical name
    return permute(types, range(1, len(types) + 1))


def unit() -> Morphism:
    """The identity on the monoidal unit: the empty diagram."""
    return id([])


def compose(f: Morphism, g: Morphism) -> Morphism:
    if tuple(f.cod) != tuple(g.dom):
        raise CompositionMismatch(
            f"cannot compose: codomain {list(f.cod)} != domain {list(g.dom)}")
    h = WiringDiagram(f.dom, g.cod)
    fv = h.add_box(Box("f", f.dom, f.cod))
    gv = h.add_box(Box("g", g.dom, g.cod))
    h.add_wires(((INPUT_ID, i), (fv, i)) for i in range(1, len(f.dom) + 1))
    h.add_wires(((fv, i), (gv, i)) for i in range(1, len(f.cod) + 1))
    h.add_wires(((gv, i), (OUTPUT_ID, i)) for i in range(1, len(g.cod) + 1))
    return Morphism(substitute(h, {fv: f.diagram, gv: g.diagram}))


def otimes(f: Morphism, g: Morphism) -> Morphism:
    m, n = len(f.dom), len(f.cod)
    h = WiringDiagram(f.dom + g.dom, f.cod + g.cod)
    fv = h.add_box(Box("f", f.dom, f.cod))
    gv = h.add_box(Box("g", g.dom, g.cod))
    h.add_wires(((INPUT_ID, i), (fv, i)) for i in range(1, m + 1))
    h.add_wires(((INPUT_ID, m + i), (gv, i)) for i in range(1, len(g.dom) + 1))
    h.add_wires(((fv, i), (OUTPUT_ID, i)) for i in range(1, n + 1))
    h.add_wires(((gv, i), (OUTPUT_ID, n + i)) for i in range(1, len(g.cod) + 1))
    return Morphism(substitute(h, {fv: f.diagram, gv: g.diagram}))


def compose_all(ms: Sequence[Morphism]) -> Morphism:
    result = ms[0]
    for m in ms[1:]:
        result = compose(result, m)
    return result


def otimes_all(ms: Sequence[Morphism]) -> Morphism:
    result = unit()
    for m in ms:
        result = otimes(result, m)
    return result


def braid(a: Sequence[str], b: Sequence[str]) -> Morphism:
    """The symmetry ``a * b -> b * a``."""
    m, n = len(a), len(b)
    sigma = [n + i for i in range(1, m + 1)] + list(range(1, n + 1))
    return permute(list(a) + list(b), sigma)


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise BadPermutation(f"{list(sigma)} is not a permutation of 1..{n}")
    return sigma


def permute(types: Sequence[str], sigma: Sequence[int]) -> Morphism:
    """Wire input ``i`` to output ``sigma[i-1]`` (one-line notation, 1-based)."""
    types = tuple(types)
    sigma = check_permutation(sigma, len(types))
    cod = [None] * len(types)
    for i, s in enumerate(sigma):
        cod[s - 1] = types[i]
    d = WiringDiagram(types, cod)
    d.add_wires(((INPUT_ID, i), (OUTPUT_ID, s)) for i, s in enumerate(sigma, start=1))
    return Morphism(d)
