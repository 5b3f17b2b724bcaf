"""JSON documents: instance files, polygon reports, polynomials."""

import json
from typing import Union

from .errors import InputError
from .pluecker import ToricInput, validate_input
from .polygon import Classification, NewtonPolygon
from .unipoly import format_poly

SAFE_INT = 2**53


def _json_int(x: int):
    return x if -SAFE_INT < x < SAFE_INT else str(x)


def _read_int(x) -> int:
    if isinstance(x, bool):
        raise InputError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise InputError(f"expected an integer, got {x!r}")


def load_instance(source: Union[str, dict]) -> ToricInput:
    """Parse an instance document (JSON text or already-decoded dict)."""
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    else:
        doc = source
    if not isinstance(doc, dict) or "A" not in doc or "f" not in doc:
        raise InputError('instance must be an object with keys "A" and "f"')
    A, f = doc["A"], doc["f"]
    if not isinstance(A, list) or not A or not all(isinstance(r, list) for r in A):
        raise InputError('"A" must be a non-empty list of rows')
    if not isinstance(f, list) or not all(isinstance(s, str) for s in f):
        raise InputError('"f" must be a list of polynomial strings')
    rows = []
    for i, row in enumerate(A):
        try:
            rows.append([_read_int(x) for x in row])
        except InputError as exc:
            raise InputError(f"row {i} of A: {exc}") from None
    return validate_input(rows, f)


def dump_instance(inst: ToricInput) -> str:
    doc = {
        "A": [[_json_int(x) for x in row] for row in inst.A],
        "f": [format_poly(g) for g in inst.f],
    }
    return json.dumps(doc)


def instance_text(doc: dict) -> str:
    return json.dumps({"A": [[_json_int(x) for x in row] for row in doc["A"]], "f": list(doc["f"])})


def polygon_to_json(poly: NewtonPolygon) -> dict:
    def strs(vs):
        return [[str(x) for x in v] for v in vs]

    return {
        "classification": poly.classification.value,
        "vertices": strs(poly.vertices),
        "edges": strs(poly.edges),
        "lattice_points": strs(poly.lattice_points),
    }


def polygon_from_json(doc: dict) -> NewtonPolygon:
    def ints(vs):
        return tuple(tuple(int(x) for x in v) for v in vs)

    return NewtonPolygon(
        vertices=ints(doc["vertices"]),
        edges=ints(doc["edges"]),
        projection=(0, 0),
        classification=Classification(doc["classification"]),
        lattice_points=ints(doc["lattice_points"]),
    )
