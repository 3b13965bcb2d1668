"""JSON documents for instances: exact rational coordinates, families, cycles and claims."""
import json
from fractions import Fraction
from typing import Any, TypedDict

from crossing_families.constructions import Claim, Instance
from crossing_families.geom_core import Point, PointSet, fraction_to_str, to_fraction
from crossing_families.graphs import Family, FamilyKind, GeomGraph, GraphKind, HamiltonianCycle
from crossing_families.utils.errors import CrossingFamiliesError, SchemaError

SCHEMA_VERSION = "1.0"


class PointRecord(TypedDict):
    x: str
    y: str
    label: str


class MemberRecord(TypedDict):
    kind: str
    vertices: list[int]


class FamilyRecord(TypedDict):
    kind: str
    members: list[MemberRecord]


class ClaimRecord(TypedDict):
    description: str
    verifier: str
    value: int
    relation: str


class InstanceDocument(TypedDict):
    schema_version: str
    name: str
    parameters: dict[str, Any]
    points: list[PointRecord]
    families: list[FamilyRecord]
    cycles: list[list[int]]
    claims: list[ClaimRecord]


def to_document(instance: Instance) -> InstanceDocument:
    S = instance.S
    families = []
    if instance.family is not None:
        families.append(
            {
                "kind": instance.family.kind.value,
                "members": [
                    {"kind": g.kind.value, "vertices": [S.index(v) for v in g.vertices]}
                    for g in instance.family.members
                ],
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "name": instance.name,
        "parameters": instance.parameters,
        "points": [
            {"x": fraction_to_str(p.x), "y": fraction_to_str(p.y), "label": S.label(i)}
            for i, p in enumerate(S.points)
        ],
        "families": families,
        "cycles": [list(instance.cycle.order)] if instance.cycle is not None else [],
        "claims": [
            {
                "description": c.description,
                "verifier": c.verifier,
                "value": c.value,
                "relation": c.relation.value,
            }
            for c in instance.claims
        ],
    }


def _parse_rational(value: Any, where: str) -> Fraction:
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise SchemaError(f"{where}: expected a rational string, got {value!r}")
    try:
        return to_fraction(value)
    except (ValueError, ZeroDivisionError) as error:
        raise SchemaError(f"{where}: cannot parse {value!r}") from error


def _require(document: dict, key: str, kind: type):
    if not isinstance(document, dict):
        raise SchemaError(f"expected an object holding {key!r}")
    if key not in document:
        raise SchemaError(f"missing field {key!r}")
    if not isinstance(document[key], kind):
        raise SchemaError(f"field {key!r} must be {kind.__name__}")
    return document[key]


def _parse_points(records: list) -> PointSet:
    points, labels = [], []
    for i, record in enumerate(records):
        if not isinstance(record, dict):
            raise SchemaError(f"points[{i}] must be an object")
        x = _parse_rational(record.get("x"), f"points[{i}].x")
        y = _parse_rational(record.get("y"), f"points[{i}].y")
        points.append(Point(x, y))
        labels.append(str(record.get("label", i)))
    try:
        return PointSet(tuple(points), tuple(labels))
    except CrossingFamiliesError as error:
        raise SchemaError(str(error)) from error


def _vertex(S: PointSet, index: Any, where: str) -> Point:
    if not isinstance(index, int) or isinstance(index, bool) or not 0 <= index < len(S):
        raise SchemaError(f"{where}: vertex index {index!r} out of range")
    return S[index]


def from_document(document: dict) -> Instance:
    """Instance described by a parsed JSON document."""
    if not isinstance(document, dict):
        raise SchemaError("document must be a JSON object")
    version = _require(document, "schema_version", str)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    S = _parse_points(_require(document, "points", list))

    families = document.get("families", [])
    cycles = document.get("cycles", [])
    if not isinstance(families, list) or len(families) > 1:
        raise SchemaError("at most one family per document")
    if not isinstance(cycles, list) or len(cycles) > 1:
        raise SchemaError("at most one cycle per document")

    try:
        family = None
        for f, record in enumerate(families):
            members = []
            for g, member in enumerate(_require(record, "members", list)):
                where = f"families[{f}].members[{g}]"
                vertices = tuple(
                    _vertex(S, index, where) for index in _require(member, "vertices", list)
                )
                members.append(GeomGraph(GraphKind(_require(member, "kind", str)), vertices))
            family = Family(tuple(members), FamilyKind(_require(record, "kind", str)))

        cycle = None
        for order in cycles:
            if not isinstance(order, list) or len(order) != len(S):
                raise SchemaError("a cycle must list every point index once")
            for index in order:
                _vertex(S, index, "cycles[0]")
            cycle = HamiltonianCycle(tuple(order))

        claims = [
            Claim(
                _require(record, "description", str),
                _require(record, "verifier", str),
                _require(record, "value", int),
                record.get("relation", "eq"),
            )
            for record in document.get("claims", [])
        ]
    except (CrossingFamiliesError, ValueError) as error:
        if isinstance(error, SchemaError):
            raise
        raise SchemaError(str(error)) from error

    return Instance(
        name=str(document.get("name", "")),
        S=S,
        family=family,
        cycle=cycle,
        claims=claims,
        parameters=dict(document.get("parameters", {})),
    )


def dumps(instance: Instance) -> str:
    """Serialized document; identical instances give identical text."""
    return json.dumps(to_document(instance), indent=2) + "\n"


def loads(text: str) -> Instance:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError(f"invalid JSON: {error}") from error
    return from_document(document)


def write_instance(instance: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as file:
        file.write(dumps(instance))


def read_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as file:
        return loads(file.read())


def read_points(path: str) -> PointSet:
    """Point set of a document; families, cycles and claims are ignored."""
    with open(path, "r", encoding="utf-8") as file:
        try:
            document = json.load(file)
        except json.JSONDecodeError as error:
            raise SchemaError(f"invalid JSON: {error}") from error
    if not isinstance(document, dict):
        raise SchemaError("document must be a JSON object")
    return _parse_points(_require(document, "points", list))
