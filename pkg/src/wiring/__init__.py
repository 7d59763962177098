"""Wiring diagrams as a normal form for free symmetric monoidal categories."""
from .diagram import (
    Box, CycleCreated, DanglingRef, DiagramError, GENERAL, InvalidDiagram, Port,
    PortOccupied, STRICT, TypeMismatch, ValidationReport, Wire, WiringDiagram, new_diagram,
)
from .equality import CanonicalForm, canonicalize, invariant_hash, is_equal
from .operad import SignatureMismatch, inert, ocompose, ocompose_at, substitute
from .smc import Morphism, braid, compose, generator, otimes, permute

__all__ = [
    "Box", "CanonicalForm", "CycleCreated", "DanglingRef", "DiagramError", "GENERAL",
    "InvalidDiagram", "Morphism", "Port", "PortOccupied", "STRICT", "SignatureMismatch",
    "TypeMismatch", "ValidationReport", "Wire", "WiringDiagram", "braid", "canonicalize",
    "compose", "generator", "inert", "invariant_hash", "is_equal", "new_diagram",
    "ocompose", "ocompose_at", "otimes", "permute", "substitute",
]
