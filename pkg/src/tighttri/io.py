"""JSON complex documents.

A document is a JSON object::

    {"name": "walkup-j",
     "vertices": [0, 1, ..., 9],                  # optional
     "facets": [[0, 1, 2, 3, 4], ...],            # or "orbit"
     "orbit": {"generators": ["(0123456789)"], "seeds": [[1, 2, 3, 4, 5]]},
     "f_vector": [10, 40, 60, 40, 10]}            # optional, checked

Orbit generators use cycle notation (or one-line lists) on the declared
vertices; when ``vertices`` is absent the labels occurring in generators and
seeds are used.  Declared vertices that lie in no facet become isolated
vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .complex import PermutationSpec, SimplicialComplex, from_facets, make_face, orbit_complex, parse_cycles
from .errors import ValidationError

ORBIT_CAP = 10**6


@dataclass(frozen=True)
class ComplexDocument:
    name: str
    vertices: tuple[int, ...] | None
    facets: tuple[tuple[int, ...], ...] | None
    orbit: dict | None = None
    f_vector: tuple[int, ...] | None = None
    extra: dict = field(default_factory=dict)


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list):
        raise ValidationError(f"{what} must be a list")
    for v in value:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"{what} must contain integers, got {v!r}")
    return value


def _faces(value, what: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list):
        raise ValidationError(f"{what} must be a list of faces")
    out = []
    for f in value:
        out.append(make_face(_int_list(f, f"each face in {what}")))
    return tuple(out)


def parse_document(text: str) -> ComplexDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ValidationError("document must be a JSON object")
    name = raw.get("name", "")
    if not isinstance(name, str):
        raise ValidationError("name must be a string")
    vertices = raw.get("vertices")
    if vertices is not None:
        vertices = tuple(make_face(_int_list(vertices, "vertices")))
    facets = _faces(raw["facets"], "facets") if "facets" in raw else None
    orbit = raw.get("orbit")
    if orbit is not None:
        if not isinstance(orbit, dict) or "generators" not in orbit or "seeds" not in orbit:
            raise ValidationError("orbit needs 'generators' and 'seeds'")
        if not isinstance(orbit["generators"], list):
            raise ValidationError("orbit generators must be a list")
        orbit = {"generators": list(orbit["generators"]), "seeds": _faces(orbit["seeds"], "orbit seeds")}
    if facets is None and orbit is None:
        raise ValidationError("document needs 'facets' or 'orbit'")
    fv = raw.get("f_vector")
    if fv is not None:
        fv = tuple(_int_list(fv, "f_vector"))
    known = {"name", "vertices", "facets", "orbit", "f_vector"}
    return ComplexDocument(name, vertices, facets, orbit, fv, {k: v for k, v in raw.items() if k not in known})


def realize(doc: ComplexDocument, orbit_cap: int = ORBIT_CAP) -> SimplicialComplex:
    faces: list[tuple[int, ...]] = list(doc.facets or ())
    if doc.orbit is not None:
        gens = doc.orbit["generators"]
        labels = set(doc.vertices or ())
        if not labels:
            for g in gens:
                if isinstance(g, str):
                    m = parse_cycles(g)
                    labels |= set(m) | set(m.values())
            for s in doc.orbit["seeds"]:
                labels |= set(s)
        spec = PermutationSpec.parse(labels, gens)
        faces.extend(orbit_complex(spec, doc.orbit["seeds"], cap=orbit_cap).facets)
    if doc.vertices is not None:
        used = {v for f in faces for v in f}
        if not used <= set(doc.vertices):
            raise ValidationError(f"facets use undeclared vertices {sorted(used - set(doc.vertices))}")
        faces.extend((v,) for v in doc.vertices if v not in used)
    X = from_facets(faces)
    if doc.f_vector is not None and tuple(doc.f_vector) != X.f_vector:
        raise ValidationError(f"declared f_vector {tuple(doc.f_vector)} does not match {X.f_vector}")
    return X


def loads(text: str, orbit_cap: int = ORBIT_CAP) -> SimplicialComplex:
    return realize(parse_document(text), orbit_cap)


def load(path: str | Path, orbit_cap: int = ORBIT_CAP) -> SimplicialComplex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    return loads(text, orbit_cap)


def dumps(X: SimplicialComplex, name: str = "") -> str:
    # one facet per line keeps large documents diffable
    facets = ",\n  ".join(json.dumps(list(f)) for f in X.facets)
    return (
        "{\n"
        f' "name": {json.dumps(name)},\n'
        f' "vertices": {json.dumps(list(X.vertices))},\n'
        f' "f_vector": {json.dumps(list(X.f_vector))},\n'
        f' "facets": [\n  {facets}\n ]\n'
        "}\n"
    )


def emit(X: SimplicialComplex, path: str | Path, name: str = "") -> None:
    Path(path).write_text(dumps(X, name), encoding="utf-8")
