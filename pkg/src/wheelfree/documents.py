"""JSON certificate documents.

The document layout is a stable external contract:

    {"n": int, "verdict": str, "complemented": bool, "certificate": {...}}

with a verdict-specific certificate object; vertex lists are sorted
ascending except "hole"/"cycle", which keep cyclic order.  Documents
round-trip: anything emitted here can be re-read and re-verified against
the graph without access to the classifier.
"""

from __future__ import annotations

from typing import Any

from .graph import FormatError, Graph
from .oracle import Hole, WheelWitness
from .recognizer import (
    CLASS_A,
    CLASS_B,
    CLASS_C,
    FIVE_HOLE,
    NOT_FREE,
    SIX_HOLE,
    SPLIT,
    Classification,
    ClassADecomposition,
    ClassBDecomposition,
    ClassCDecomposition,
    SplitPartition,
)


def to_document(g: Graph, c: Classification) -> dict[str, Any]:
    cert = c.certificate
    if c.verdict in (FIVE_HOLE, SIX_HOLE):
        body: dict[str, Any] = {"cycle": list(cert)}
    elif c.verdict == SPLIT:
        body = {"clique": sorted(cert.clique), "stable": sorted(cert.stable)}
    elif c.verdict == CLASS_A:
        body = {"a": cert.a, "b": cert.b, "c": cert.c, "d": cert.d,
                "e": cert.e, "X": sorted(cert.X)}
    elif c.verdict == CLASS_B:
        body = {"X": sorted(cert.X), "Y": sorted(cert.Y),
                "Z": sorted(cert.Z), "W": sorted(cert.W),
                "x": cert.x, "y": cert.y}
    elif c.verdict == CLASS_C:
        pairs = sorted([sorted(cert.m1), sorted(cert.m2)])
        body = {"X": sorted(cert.X), "Y": sorted(cert.Y), "matching": pairs}
    elif c.verdict == NOT_FREE:
        body = {"hole": list(cert.hole.cycle), "hub": cert.hub,
                "in_complement": cert.in_complement}
    else:
        raise ValueError(f"unknown verdict {c.verdict!r}")
    return {
        "n": g.n,
        "verdict": c.verdict,
        "complemented": False if c.verdict == NOT_FREE else c.complemented,
        "certificate": body,
    }


def _int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"certificate field {key!r} must be an integer")
    return v


def _int_list(doc: dict, key: str) -> tuple[int, ...]:
    v = doc.get(key)
    if not isinstance(v, list) or any(
            not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise FormatError(f"certificate field {key!r} must be a list of integers")
    return tuple(v)


def from_document(doc: Any) -> tuple[int, Classification]:
    """Parse a certificate document into (n, Classification).

    Only structure is validated here (types, required fields); whether
    the certificate actually holds for a graph is the verifier's job.
    """
    if not isinstance(doc, dict):
        raise FormatError("certificate document must be a JSON object")
    n = _int(doc, "n")
    verdict = doc.get("verdict")
    body = doc.get("certificate")
    if not isinstance(body, dict):
        raise FormatError("certificate field must be an object")
    complemented = doc.get("complemented")
    if not isinstance(complemented, bool):
        raise FormatError("complemented field must be a boolean")
    if verdict in (FIVE_HOLE, SIX_HOLE):
        cert: object = _int_list(body, "cycle")
    elif verdict == SPLIT:
        cert = SplitPartition(_int_list(body, "clique"), _int_list(body, "stable"))
    elif verdict == CLASS_A:
        cert = ClassADecomposition(
            _int(body, "a"), _int(body, "b"), _int(body, "c"),
            _int(body, "d"), _int(body, "e"), _int_list(body, "X"))
    elif verdict == CLASS_B:
        cert = ClassBDecomposition(
            _int_list(body, "X"), _int_list(body, "Y"),
            _int_list(body, "Z"), _int_list(body, "W"),
            _int(body, "x"), _int(body, "y"))
    elif verdict == CLASS_C:
        pairs = body.get("matching")
        if (not isinstance(pairs, list) or len(pairs) != 2
                or any(not isinstance(p, list) or len(p) != 2 for p in pairs)):
            raise FormatError("matching must be a list of two vertex pairs")
        (u1, v1), (u2, v2) = pairs
        for x in (u1, v1, u2, v2):
            if not isinstance(x, int) or isinstance(x, bool):
                raise FormatError("matching endpoints must be integers")
        cert = ClassCDecomposition(
            _int_list(body, "X"), _int_list(body, "Y"), (u1, v1), (u2, v2))
    elif verdict == NOT_FREE:
        in_co = body.get("in_complement")
        if not isinstance(in_co, bool):
            raise FormatError("in_complement must be a boolean")
        cert = WheelWitness(Hole(_int_list(body, "hole")), _int(body, "hub"), in_co)
    else:
        raise FormatError(f"unknown verdict {verdict!r}")
    return n, Classification(verdict, cert, complemented)
