"""JSON Schemas (draft 2020-12) for the ``--format json`` outputs of the CLI."""

_ENTRIES = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [
            {"type": "integer", "minimum": 0},
            {"type": "integer", "minimum": 0},
            {"type": "integer", "minimum": 1},
        ],
        "minItems": 3,
        "maxItems": 3,
    },
}

BETTI_TABLE = {
    "type": "object",
    "properties": {"entries": _ENTRIES},
    "required": ["entries"],
    "additionalProperties": False,
}

_TABLES = {
    "type": "object",
    "patternProperties": {"^[1-9][0-9]*$": BETTI_TABLE},
    "additionalProperties": False,
}

_IDEAL = {"type": "array", "items": {"type": "string"}, "minItems": 1}
_SEQ = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1}
_RATIONAL = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+/[0-9]+$"}]}

BETTI_OUTPUT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bettistab betti",
    "type": "object",
    "properties": {
        "ring": {"type": "array", "items": {"type": "string"}},
        "ideal": _IDEAL,
        "r": {"type": "integer", "minimum": 1},
        "power": {"type": "integer", "minimum": 1},
        "tables": _TABLES,
    },
    "required": ["ring", "ideal", "r", "power", "tables"],
    "additionalProperties": False,
}

STABSEQ_OUTPUT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bettistab stabseq",
    "type": "object",
    "properties": {
        "ring": {"type": "array", "items": {"type": "string"}},
        "ideal": _IDEAL,
        "r": {"type": "integer", "minimum": 1},
        "max_power": {"type": "integer", "minimum": 1},
        "lookahead": {"type": "integer", "minimum": 0},
        "equigenerated": {"type": "boolean"},
        "tables": _TABLES,
        "stab_seq": _SEQ,
        "estimated_stab": {"type": ["integer", "null"]},
        "stable_run_length": {"type": "integer", "minimum": 0},
        "recurrences": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
    "required": ["ideal", "r", "tables", "stab_seq", "estimated_stab", "stable_run_length"],
    "additionalProperties": False,
}

_FIT = {
    "oneOf": [
        {"type": "null"},
        {
            "type": "object",
            "properties": {
                "slope": _RATIONAL,
                "intercept": _RATIONAL,
                "n_values": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
            },
            "required": ["slope", "intercept", "n_values"],
            "additionalProperties": False,
        },
    ]
}

SWEEP_OUTPUT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "bettistab sweep",
    "type": "object",
    "properties": {
        "ring": {"type": "array", "items": {"type": "string"}},
        "family": {"type": "string"},
        "max_power": {"type": "integer", "minimum": 1},
        "lookahead": {"type": "integer", "minimum": 0},
        "members": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "n": {"type": "integer"},
                    "ideal": _IDEAL,
                    "r": {"type": "integer", "minimum": 1},
                    "stab_seq": _SEQ,
                    "estimated_stab": {"type": ["integer", "null"]},
                    "stable_run_length": {"type": "integer", "minimum": 0},
                },
                "required": ["n", "ideal", "r", "stab_seq", "estimated_stab", "stable_run_length"],
                "additionalProperties": False,
            },
        },
        "fits": {
            "type": "object",
            "properties": {"stab": _FIT, "cardinality": _FIT},
            "required": ["stab", "cardinality"],
            "additionalProperties": False,
        },
    },
    "required": ["family", "members", "fits"],
    "additionalProperties": False,
}

SCHEMAS = {"betti": BETTI_OUTPUT, "stabseq": STABSEQ_OUTPUT, "sweep": SWEEP_OUTPUT}
