"""Cross-check of the two composition engines.

Substituting into a diagram and composing its span form with the block
formula must give span-isomorphic results, once the inner boxes are put in
the same order: substitution keeps the surviving host boxes first and
appends the new ones, while the formula splices them in place of box ``i``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import WiringDiagram
from .fuzz import random_host_and_sub
from .operad import ocompose_at
from .spans import compose_formula, span_iso, wd_to_span


@dataclass
class OracleResult:
    agree: bool
    boxes: int
    wires: int

    def to_dict(self) -> dict:
        return {"agree": self.agree, "boxes": self.boxes, "wires": self.wires}


def splice_order(n: int, i: int, m: int) -> list[int]:
    """Box order that moves the formula's layout onto substitution's layout.

    ``n`` host boxes, ``m`` boxes substituted at box ``i`` (1-based).
    """
    return (list(range(1, i)) + [k + m - 1 for k in range(i + 1, n + 1)]
            + list(range(i, i + m)))


def cross_check(host: WiringDiagram, i: int, sub: WiringDiagram) -> OracleResult:
    """Compare both engines for ``sub`` substituted at box ``i`` of ``host``."""
    result = ocompose_at(host, i, sub)
    formula = compose_formula(wd_to_span(sub), i, wd_to_span(host))
    formula = formula.reorder_boxes(splice_order(len(host), i, len(sub)))
    return OracleResult(span_iso(wd_to_span(result), formula), len(result), len(result.wires))


def random_cases(n: int, seed: int = 0, host_max: int = 5, sub_max: int = 4):
    rng = random.Random(seed)
    for _ in range(n):
        host, v, sub = random_host_and_sub(rng, host_max=host_max, sub_max=sub_max)
        yield host, v - 2, sub
