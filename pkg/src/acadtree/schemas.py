"""JSON Schemas for the public wire formats.

These are the contracts the HTTP API and the CLI JSON outputs promise;
the test suite validates live payloads against them.
"""

from __future__ import annotations

_ID = {"type": "string", "minLength": 1}
_LEVEL = {"enum": ["MSC", "PHD"]}
_DIRECTION = {"enum": ["SUPERVISOR_DECLARED", "SUPERVISEE_DECLARED"]}

TIMELINE_SCHEMA = {
    "type": "object",
    "patternProperties": {
        r"^\d{4}$": {
            "type": "object",
            "properties": {"msc": {"type": "integer"}, "phd": {"type": "integer"}},
            "required": ["msc", "phd"],
            "additionalProperties": False,
        }
    },
    "additionalProperties": False,
}

METRICS_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "researcher_id": _ID,
        "width": {"type": "integer", "minimum": 0},
        "fecundity": {"type": "integer", "minimum": 0},
        "fertility": {"type": "integer", "minimum": 0},
        "depth": {"type": "integer", "minimum": 0},
        "generations": {"type": "integer", "minimum": 0},
        "descendancy": {"type": "integer", "minimum": 0},
        "genealogical_index": {"type": "integer", "minimum": 0},
        "relationships": {"type": "integer", "minimum": 0},
        "cousins": {"type": "integer", "minimum": 0},
        "avg_supervisions_per_year": {
            "type": "object",
            "properties": {
                "numerator": {"type": "integer"},
                "denominator": {"type": "integer", "minimum": 1},
                "display": {"type": "string", "pattern": r"^\d+\.\d$"},
            },
            "required": ["numerator", "denominator", "display"],
            "additionalProperties": False,
        },
        "first_supervision_year": {"type": ["integer", "null"]},
        "last_supervision_year": {"type": ["integer", "null"]},
        "deepest_path": {"type": "array", "items": _ID, "minItems": 1},
        "timeline": TIMELINE_SCHEMA,
    },
    "required": [
        "researcher_id", "width", "fecundity", "fertility", "depth",
        "generations", "descendancy", "genealogical_index", "relationships",
        "cousins", "avg_supervisions_per_year", "first_supervision_year",
        "last_supervision_year", "deepest_path", "timeline",
    ],
    "additionalProperties": False,
}

TREE_VIEW_SCHEMA = {
    "type": "object",
    "properties": {
        "root_id": _ID,
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": _ID,
                    "name": {"type": "string"},
                    "child_count": {"type": "integer", "minimum": 0},
                    "expandable": {"type": "boolean"},
                },
                "required": ["id", "name", "child_count", "expandable"],
                "additionalProperties": False,
            },
            "minItems": 1,
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "supervisor_id": _ID,
                    "supervisee_id": _ID,
                    "level": _LEVEL,
                    "year": {"type": "integer"},
                },
                "required": ["supervisor_id", "supervisee_id", "level", "year"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["root_id", "nodes", "edges"],
    "additionalProperties": False,
}

SEARCH_RESULT_SCHEMA = {
    "type": "object",
    "properties": {
        "total_matches": {"type": "integer", "minimum": 0},
        "page": {"type": "integer", "minimum": 1},
        "page_size": {"type": "integer", "minimum": 1, "maximum": 100},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": _ID,
                    "name": {"type": "string"},
                    "institution": {"type": ["string", "null"]},
                    "width": {"type": "integer", "minimum": 0},
                    "descendancy": {"type": "integer", "minimum": 0},
                },
                "required": ["id", "name", "institution", "width", "descendancy"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["total_matches", "page", "page_size", "results"],
    "additionalProperties": False,
}

RESEARCHER_DETAIL_SCHEMA = {
    "type": "object",
    "properties": {
        "id": _ID,
        "name": {"type": "string", "minLength": 1},
        "citation_names": {"type": "array", "items": {"type": "string"}},
        "institution": {"type": ["string", "null"]},
        "areas": {"type": "array", "items": {"type": "string"}},
        "degrees": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "level": {"enum": ["MSC", "PHD", "OTHER"]},
                    "year": {"type": "integer"},
                    "thesis": {"type": ["string", "null"]},
                    "supervisor": {"type": ["string", "null"]},
                    "institution": {"type": ["string", "null"]},
                    "areas": {"type": "array", "items": {"type": "string"}},
                },
                "required": ["level", "year", "thesis", "supervisor", "institution", "areas"],
                "additionalProperties": False,
            },
        },
        "supervisions_declared": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "level": _LEVEL,
                    "year": {"type": "integer"},
                    "supervisee": {"type": "string"},
                },
                "required": ["level", "year", "supervisee"],
                "additionalProperties": False,
            },
        },
        "supervision_counts": {
            "type": "object",
            "properties": {
                "msc": {"type": "integer", "minimum": 0},
                "phd": {"type": "integer", "minimum": 0},
                "total": {"type": "integer", "minimum": 0},
            },
            "required": ["msc", "phd", "total"],
            "additionalProperties": False,
        },
        "resume": {"type": ["string", "null"]},
    },
    "required": [
        "id", "name", "citation_names", "institution", "areas", "degrees",
        "supervisions_declared", "supervision_counts", "resume",
    ],
    "additionalProperties": False,
}

_NAMED_REF = {
    "type": "object",
    "properties": {"id": _ID, "name": {"type": "string"}},
    "required": ["id", "name"],
    "additionalProperties": False,
}

ANCESTORS_SCHEMA = {
    "type": "object",
    "properties": {
        "researcher_id": _ID,
        "generations": {
            "type": "array",
            "items": {"type": "array", "items": _NAMED_REF, "minItems": 1},
        },
    },
    "required": ["researcher_id", "generations"],
    "additionalProperties": False,
}

DEEPEST_PATH_SCHEMA = {
    "type": "object",
    "properties": {
        "researcher_id": _ID,
        "path": {"type": "array", "items": _NAMED_REF, "minItems": 1},
    },
    "required": ["researcher_id", "path"],
    "additionalProperties": False,
}

ERROR_ENVELOPE_SCHEMA = {
    "type": "object",
    "properties": {
        "error": {
            "type": "object",
            "properties": {
                "code": {"type": "string", "minLength": 1},
                "message": {"type": "string", "minLength": 1},
            },
            "required": ["code", "message"],
            "additionalProperties": False,
        }
    },
    "required": ["error"],
    "additionalProperties": False,
}

EDGE_LINE_SCHEMA = {
    "type": "object",
    "properties": {
        "supervisor_id": _ID,
        "supervisee_id": _ID,
        "level": _LEVEL,
        "year": {"type": "integer"},
        "provenance": {"type": "array", "items": _DIRECTION, "minItems": 1},
    },
    "required": ["supervisor_id", "supervisee_id", "level", "year", "provenance"],
    "additionalProperties": False,
}

LINK_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "total_claims": {"type": "integer", "minimum": 0},
        "resolved_count": {"type": "integer", "minimum": 0},
        "ambiguous_claims": {"type": "array"},
        "unmatched_claims": {"type": "array"},
        "year_conflicts": {"type": "array"},
    },
    "required": [
        "total_claims", "resolved_count", "ambiguous_claims",
        "unmatched_claims", "year_conflicts",
    ],
    "additionalProperties": False,
}
