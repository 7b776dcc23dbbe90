"""Published JSON schemas for every machine-readable output."""

from __future__ import annotations

WITNESS_SCHEMA = {
    "type": "object",
    "properties": {
        "role": {"type": "string"},
        "element-index": {"type": "integer", "minimum": 0},
        "display": {"type": "string"},
    },
    "required": ["role", "element-index", "display"],
    "additionalProperties": False,
}

CHECK_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "subject": {"type": "string"},
        "predicate": {"type": "string"},
        "verdict": {"type": "boolean"},
        "witness": {"type": "array", "items": WITNESS_SCHEMA},
        "notes": {"type": "string"},
    },
    "required": ["subject", "predicate", "verdict", "witness", "notes"],
    "additionalProperties": False,
}

RING_DUMP_SCHEMA = {
    "type": "object",
    "properties": {
        "label": {"type": "string"},
        "order": {"type": "integer", "minimum": 2},
        "add": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "mul": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "zero": {"type": "integer", "minimum": 0},
        "one": {"type": "integer", "minimum": 0},
    },
    "required": ["label", "order", "add", "mul", "zero", "one"],
    "additionalProperties": False,
}

THEOREM_CHECK_SCHEMA = {
    "type": "object",
    "properties": {
        "check_id": {"type": "string"},
        "statement": {"type": "string"},
        "scope_size": {"type": "integer", "minimum": 0},
        "verdict": {"type": "boolean"},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "ring": {"type": "string"},
                    "notes": {"type": "string"},
                    "witness": {"type": "array", "items": WITNESS_SCHEMA},
                },
                "required": ["ring", "notes", "witness"],
                "additionalProperties": False,
            },
        },
        "runtime_ms": {"type": "integer", "minimum": 0},
        "notes": {"type": "string"},
    },
    "required": ["check_id", "statement", "scope_size", "verdict",
                 "counterexamples", "runtime_ms", "notes"],
    "additionalProperties": False,
}

VERIFY_SCHEMA = {
    "type": "object",
    "properties": {
        "checks": {"type": "array", "items": THEOREM_CHECK_SCHEMA},
        "verdict": {"type": "boolean"},
    },
    "required": ["checks", "verdict"],
    "additionalProperties": False,
}

INFO_SCHEMA = {
    "type": "object",
    "properties": {
        "subject": {"type": "string"},
        "order": {"type": "integer", "minimum": 2},
        "zero": {"type": "integer"},
        "one": {"type": "integer"},
        "sets": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "properties": {
                    "indices": {"type": "array", "items": {"type": "integer"}},
                    "displays": {"type": "array", "items": {"type": "string"}},
                },
                "required": ["indices", "displays"],
                "additionalProperties": False,
            },
        },
        "classes": {"type": "object", "additionalProperties": {"type": "boolean"}},
    },
    "required": ["subject", "order", "zero", "one", "sets", "classes"],
    "additionalProperties": False,
}

SEARCH_SCHEMA = {
    "type": "object",
    "properties": {
        "include": {"type": "array", "items": {"type": "string"}},
        "exclude": {"type": "array", "items": {"type": "string"}},
        "max_order": {"type": ["integer", "null"]},
        "matches": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["include", "exclude", "max_order", "matches"],
    "additionalProperties": False,
}

CLASSES_SCHEMA = {
    "type": "object",
    "additionalProperties": {
        "type": "object",
        "properties": {
            "category": {"type": "string"},
            "condition": {"type": "string"},
        },
        "required": ["category", "condition"],
        "additionalProperties": False,
    },
}
