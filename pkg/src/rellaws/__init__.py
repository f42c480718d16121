"""Exhaustive-search toolkit for binary relations on small finite sets."""

from .relation import NMAX, Relation, element_names
from .properties import (
    DUAL,
    KIND_REQUIREMENTS,
    MINED_PROPERTIES,
    VECTOR_BITS,
    PropertyId,
    RelationKind,
    classify_kinds,
    holds,
    parse_property,
    property_vector,
    vector_properties,
)
from .enumeration import (
    RowSignature,
    canonicalize,
    enumerate_all,
    enumerate_normal,
    is_normal_form,
    normal_form_count,
    row_signature,
)
from .census import (
    VectorCensus,
    load_census,
    property_census,
    save_census,
    vector_census,
)
from .mining import (
    Implicant,
    Law,
    MineResult,
    MiningState,
    RectangleStatus,
    format_law,
    law_line,
    laws_from_csv,
    laws_to_csv,
    mine,
    parse_law_text,
    rectangle_members,
    rectangle_status,
)
from .redundancy import entails, flag_csv, implicant_clause, star_redundant
from .search import (
    LiteralConjunction,
    export_dot,
    find_witness,
    min_universe,
)

__all__ = [
    "NMAX", "Relation", "element_names",
    "DUAL", "KIND_REQUIREMENTS", "MINED_PROPERTIES", "VECTOR_BITS",
    "PropertyId", "RelationKind", "classify_kinds", "holds",
    "parse_property", "property_vector", "vector_properties",
    "RowSignature", "canonicalize", "enumerate_all", "enumerate_normal",
    "is_normal_form", "normal_form_count", "row_signature",
    "VectorCensus", "load_census", "property_census", "save_census",
    "vector_census",
    "Implicant", "Law", "MineResult", "MiningState", "RectangleStatus",
    "format_law", "law_line", "laws_from_csv", "laws_to_csv", "mine",
    "parse_law_text", "rectangle_members", "rectangle_status",
    "entails", "flag_csv", "implicant_clause", "star_redundant",
    "LiteralConjunction", "export_dot", "find_witness", "min_universe",
]

__version__ = "0.1.0"
