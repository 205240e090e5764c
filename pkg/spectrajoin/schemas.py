"""
marshmallow schemas for the JSON documents the tool reads, and for its graph,
polynomial and spectrum output.

Example:
    >>> from marshmallow import ValidationError
    >>> try:
    ...     graph = GraphSchema().load({'n': 2, 'edges': [[0, 1]]})
    ... except ValidationError as err:
    ...     print(err.messages)
"""

import logging

from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from .algebra import Poly, format_fraction, to_fraction
from .config import settings
from .graphs.graph import Graph

logger = logging.getLogger(__name__)

# Fractions travel as "p/q" strings, floats as numbers
_EXACT = validate.Regexp(r"^-?\d+(/\d+)?$", error="Expected an exact number like '3' or '-1/2'")


class GraphSchema(Schema):
    """``{"n": int, "edges": [[i, j], ...]}`` with i < j, sorted."""

    n = fields.Int(required=True, validate=validate.Range(min=0))
    edges = fields.Method("dump_edges", deserialize="load_edges", load_default=list)

    def dump_edges(self, graph: Graph):
        return [[u, v] for u, v in graph.edges()]

    def load_edges(self, value):
        if not isinstance(value, list) or any(
            not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e)
            for e in value
        ):
            raise ValidationError("edges must be a list of [i, j] integer pairs")
        return [tuple(e) for e in value]

    @validates_schema
    def validate_edges(self, data, **kwargs):
        n = data["n"]
        for i, j in data.get("edges", []):
            if not 0 <= i < j < n:
                raise ValidationError(f"edge [{i}, {j}] needs 0 <= i < j < n={n}", "edges")
        if len(set(data.get("edges", []))) != len(data.get("edges", [])):
            raise ValidationError("duplicate edge", "edges")

    @post_load
    def make_graph(self, data, **kwargs) -> Graph:
        return Graph.from_edges(data["n"], data.get("edges", []))


class PolySchema(Schema):
    """``{"coeffs": ["p/q", ...]}``, lowest degree first."""

    coeffs = fields.Method("dump_coeffs", deserialize="load_coeffs", required=True)

    def dump_coeffs(self, poly: Poly):
        return [format_fraction(c) for c in poly.coeffs]

    def load_coeffs(self, value):
        if not isinstance(value, list):
            raise ValidationError("coeffs must be a list")
        for item in value:
            _EXACT(str(item))
        return [to_fraction(str(item)) for item in value]

    @post_load
    def make_poly(self, data, **kwargs) -> Poly:
        return Poly(data["coeffs"])


class SpectrumSchema(Schema):
    """Dump-only view of a Spectrum: exact values as strings, others as floats."""

    kind = fields.Function(lambda s: s.kind.value)
    entries = fields.Function(
        lambda s: [
            {"value": _dump_value(value), "mult": mult} for value, mult in s.entries
        ]
    )
    values = fields.Function(
        lambda s: [round(v, settings.DISPLAY_DECIMALS) + 0.0 for v in s.values()]
    )


def _dump_value(value):
    if isinstance(value, float):
        return value
    return format_fraction(value)


class SearchCacheSchema(Schema):
    """``{"n", "r", "graphs": [graph6, ...], "pairs": [[i, j], ...]}``."""

    n = fields.Int(required=True, validate=validate.Range(min=1))
    r = fields.Int(required=True, validate=validate.Range(min=0))
    graphs = fields.List(fields.Str(), required=True)
    pairs = fields.List(
        fields.List(fields.Int(validate=validate.Range(min=0)), validate=validate.Length(equal=2)),
        required=True,
    )

    @validates_schema
    def validate_pairs(self, data, **kwargs):
        count = len(data["graphs"])
        for i, j in data["pairs"]:
            if not i < j < count:
                raise ValidationError(f"pair [{i}, {j}] does not index {count} graphs", "pairs")


class ExpectedSpectrumSchema(Schema):
    """One row of the published-spectra table."""

    id = fields.Str(required=True)
    join = fields.Str(required=True, validate=validate.OneOf(settings.JOIN_KINDS))
    g1 = fields.Str(required=True)
    g2 = fields.Str(required=True)
    matrix = fields.Str(load_default="A", validate=validate.OneOf(settings.MATRIX_KINDS))
    expected = fields.List(fields.Float(), required=True)
    source = fields.Str(load_default="")


class ExpectedTableSchema(Schema):
    version = fields.Int(required=True)
    spectra = fields.List(fields.Nested(ExpectedSpectrumSchema), required=True)
