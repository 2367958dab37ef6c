"""JSON Schemas for everything the CLI prints."""

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_EDGE_LIST = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
}

FACTOR = {
    "type": "object",
    "required": ["exists", "edges", "degrees"],
    "properties": {
        "exists": {"type": "boolean"},
        "edges": _EDGE_LIST,
        "degrees": _INT_LIST,
    },
    "additionalProperties": False,
}

CRITERION_REPORT = {
    "type": "object",
    "required": ["satisfied", "witness", "min_eta", "pairs_examined"],
    "properties": {
        "satisfied": {"type": "boolean"},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["S", "T", "eta"],
                    "properties": {"S": _INT_LIST, "T": _INT_LIST, "eta": {"type": "integer"}},
                    "additionalProperties": False,
                },
            ]
        },
        "min_eta": {"type": "integer"},
        "pairs_examined": {"type": "integer", "minimum": 1},
    },
    "additionalProperties": False,
}

ALL_PARITY = {
    "type": "object",
    "required": ["satisfied", "failing_h", "a", "b"],
    "properties": {
        "satisfied": {"type": "boolean"},
        "failing_h": {"oneOf": [{"type": "null"}, _INT_LIST]},
        "a": {"type": "integer"},
        "b": {"type": "integer"},
    },
    "additionalProperties": False,
}

HYPOTHESIS_REPORT = {
    "type": "object",
    "required": ["theorem", "all_hold", "failed", "conditions"],
    "properties": {
        "theorem": {"type": "string"},
        "all_hold": {"type": "boolean"},
        "failed": {"type": "array", "items": {"type": "string"}},
        "conditions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "holds", "detail"],
                "properties": {
                    "name": {"type": "string"},
                    "holds": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

EXPERIMENT_REPORT = {
    "type": "object",
    "required": ["kind", "seed", "trials", "params", "failures"],
    "properties": {
        "kind": {"enum": ["sample", "frontier"]},
        "seed": {"type": "integer"},
        "trials": {"type": "integer", "minimum": 0},
        "params": {"type": "object"},
        "failures": {"type": "array", "items": {"type": "object"}},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "instance", "method", "conclusion", "hypotheses", "label"],
                "properties": {
                    "n": {"type": "integer"},
                    "instance": {"type": "object"},
                    "method": {"enum": ["parity", "exhaustive_h", "niessen_scan", "sampled"]},
                    "conclusion": {"type": "boolean"},
                    "hypotheses": {"type": "object"},
                    "label": {"const": "exploration"},
                },
            },
        },
    },
    "additionalProperties": False,
}

REMARK_SIDE = {
    "type": "object",
    "required": ["s", "t", "eta"],
    "properties": {"s": {"type": "integer"}, "t": {"type": "integer"}, "eta": {"type": "integer"}},
}
