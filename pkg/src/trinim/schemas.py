"""Published JSON Schemas for the HTTP API responses.

These are the wire contract the web client codes against: every 2xx body
validates against the schema for its endpoint, and the error shapes cover the
4xx bodies. Tests round-trip live responses through these schemas.
"""

from __future__ import annotations

POSITION_SCHEMA = {
    "type": "array",
    "items": {"type": "integer", "minimum": 0},
    "minItems": 3,
    "maxItems": 3,
}

MOVE_FIELDS = {
    "edge": {"enum": ["XY", "YZ", "ZX"]},
    "take": {"type": "integer", "minimum": 1},
    "give": {"type": "integer", "minimum": 0},
}

MOVE_SCHEMA = {
    "type": "object",
    "required": ["edge", "take", "give"],
    "properties": dict(MOVE_FIELDS),
    "additionalProperties": False,
}

CLASSIFY_RESPONSE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ClassifyResponse",
    "type": "object",
    "required": [
        "position",
        "convention",
        "outcome",
        "matched_set",
        "witness_rotation",
        "winning_moves",
        "winning_moves_complete",
        "grundy",
    ],
    "properties": {
        "position": POSITION_SCHEMA,
        "convention": {"enum": ["normal", "misere"]},
        "outcome": {"enum": ["P", "N"]},
        # Which P-set description matched: null exactly when the outcome is N.
        "matched_set": {"enum": ["S", "S1+", "S1-", "S2-", None]},
        # Rotation index r such that rotating (x,y,z) left by r gives (a,b,c)
        # with a = b + c and b >= phi*c; null when no rotation qualifies.
        "witness_rotation": {"enum": [0, 1, 2, None]},
        "winning_moves": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["edge", "take", "give", "result"],
                "properties": dict(MOVE_FIELDS) | {"result": POSITION_SCHEMA},
                "additionalProperties": False,
            },
        },
        # False when the position is too large for exhaustive enumeration and
        # only the constructive winning move is listed.
        "winning_moves_complete": {"type": "boolean"},
        # Normal-play Grundy value; null when the total exceeds the cache bound.
        "grundy": {"type": ["integer", "null"], "minimum": 0},
    },
    "additionalProperties": False,
}

MOVE_RESPONSE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "MoveResponse",
    "type": "object",
    "required": [
        "valid",
        "next",
        "next_outcome",
        "engine_move",
        "engine_next",
        "terminal_after",
        "winner",
    ],
    "properties": {
        "valid": {"const": True},
        "next": POSITION_SCHEMA,
        "next_outcome": {"enum": ["P", "N"]},
        "engine_move": {"oneOf": [MOVE_SCHEMA, {"type": "null"}]},
        "engine_next": {"oneOf": [POSITION_SCHEMA, {"type": "null"}]},
        "terminal_after": {"enum": ["none", "human", "engine"]},
        "winner": {"enum": ["human", "engine", None]},
    },
    "additionalProperties": False,
}

MOVE_REJECTED_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "MoveRejected",
    "type": "object",
    "required": ["valid", "reason"],
    "properties": {
        "valid": {"const": False},
        "reason": {"type": "string"},
    },
    "additionalProperties": False,
}

GRUNDY_RESPONSE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "GrundyResponse",
    "type": "object",
    "required": ["grundy"],
    "properties": {"grundy": {"type": "integer", "minimum": 0}},
    "additionalProperties": False,
}

HEALTH_RESPONSE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "HealthResponse",
    "type": "object",
    "required": ["status"],
    "properties": {"status": {"const": "ok"}},
    "additionalProperties": False,
}

ERROR_RESPONSE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ErrorResponse",
    "type": "object",
    "required": ["error"],
    "properties": {"error": {"type": "string"}},
    "additionalProperties": False,
}
