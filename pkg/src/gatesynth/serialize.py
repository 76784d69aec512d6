"""Text formats: matrix files and circuit documents.

Matrices travel as row-major JSON arrays of [re, im] pairs. A circuit
document bundles the entangler descriptor, tolerances, the ordered
element list, the global phase, and the synthesis report, so that a
document can be re-verified without any outside context.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .matcore import (DEFAULT_TOL, Circuit, EntanglerApp, LocalPair,
                      ToleranceConfig, require_unitary)

DOCUMENT_FORMAT = "gatesynth-circuit-v1"


def _complex_rows(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, dtype=complex)]


def _rows_complex(rows: list) -> np.ndarray:
    try:
        return np.array([[complex(pair[0], pair[1]) for pair in row] for row in rows])
    except (TypeError, IndexError) as exc:
        raise ValueError(f"malformed matrix entries: {exc}") from exc


def format_matrix(m: np.ndarray) -> str:
    """Serialize a complex matrix as row-major [re, im] pairs."""
    return json.dumps(_complex_rows(m), indent=1)


def parse_matrix_text(text: str, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Parse and validate a matrix file; rejects non-unitary contents."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed matrix document: {exc}") from exc
    m = _rows_complex(rows)
    if m.shape not in ((2, 2), (4, 4)):
        raise ValueError(f"matrix must be 2x2 or 4x4, got {m.shape}")
    return require_unitary(m, tol.unitarity_tol, "matrix file contents")


@dataclass
class CircuitDocument:
    """Self-contained circuit record for emission and re-verification."""

    entangler: dict
    circuit: Circuit
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    report: dict | None = None


def _element_record(elem) -> dict:
    if isinstance(elem, EntanglerApp):
        return {"kind": "entangler"}
    return {"kind": "local", "a": _complex_rows(elem.a), "b": _complex_rows(elem.b)}


def emit_circuit_document(doc: CircuitDocument) -> str:
    payload = {
        "format": DOCUMENT_FORMAT,
        "entangler": doc.entangler,
        "tolerances": {
            "unitarity_tol": doc.tolerances.unitarity_tol,
            "snap_tol": doc.tolerances.snap_tol,
            "verify_tol": doc.tolerances.verify_tol,
        },
        "elements": [_element_record(e) for e in doc.circuit.elements],
        "phase": [doc.circuit.phase.real, doc.circuit.phase.imag],
        "report": doc.report,
    }
    return json.dumps(payload, indent=1)


def parse_circuit_document(text: str) -> CircuitDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed circuit document: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != DOCUMENT_FORMAT:
        raise ValueError("not a gatesynth circuit document")
    try:
        tolerances = ToleranceConfig(**payload["tolerances"])
        elements: list = []
        for record in payload["elements"]:
            if record["kind"] == "entangler":
                elements.append(EntanglerApp())
            elif record["kind"] == "local":
                elements.append(LocalPair(_rows_complex(record["a"]),
                                          _rows_complex(record["b"])))
            else:
                raise ValueError(f"unknown element kind {record['kind']!r}")
        phase = complex(payload["phase"][0], payload["phase"][1])
        if abs(abs(phase) - 1.0) > 1e-9:
            raise ValueError(f"circuit phase has modulus {abs(phase)!r}, expected 1")
        circuit = Circuit(elements, phase)
        return CircuitDocument(entangler=payload["entangler"], circuit=circuit,
                               tolerances=tolerances, report=payload.get("report"))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed circuit document: {exc}") from exc
