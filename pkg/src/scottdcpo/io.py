"""JSON poset/space formats and DOT export of Hasse diagrams.

Poset: ``{"elements": ["a","b"], "covers": [["a","b"]]}``.
Space: ``{"points": ["a","b"], "closed": [[],["a"],["a","b"]]}``; the
sobrification output may carry an extra ``"eta"`` map.
"""

from __future__ import annotations

import json

from .errors import FormatError
from .isomorphism import canonical_labeling
from .poset import FinitePoset, bits, from_cover_relation
from .topology import FiniteSpace, from_closed_family

POSET_KEYS = {"elements", "covers"}
SPACE_KEYS = {"points", "closed"}


def _line_of(text: str, token: str) -> int:
    idx = text.find(token)
    return text.count("\n", 0, idx) + 1 if idx >= 0 else 1


class InputError(FormatError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(message)
        self.line = line
        self.column = column


def _string_list(value, what: str, line: int) -> list:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise InputError(f"{what} must be an array of strings", line)
    if len(set(value)) != len(value):
        raise InputError(f"{what} must not repeat labels", line)
    return value


def parse_document(text: str):
    """Parse a poset or space document; returns ``("poset", P)`` or
    ``("space", X)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    keys = set(doc)
    if "elements" in keys:
        extra = keys - POSET_KEYS
        if extra:
            raise InputError(f"unknown keys {sorted(extra)}", _line_of(text, f'"{sorted(extra)[0]}"'))
        labels = _string_list(doc["elements"], "elements", _line_of(text, '"elements"'))
        covers = doc.get("covers", [])
        line = _line_of(text, '"covers"')
        if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 and all(isinstance(v, str) for v in c) for c in covers
        ):
            raise InputError("covers must be an array of [lower, upper] label pairs", line)
        try:
            return "poset", from_cover_relation(labels, covers)
        except ValueError as exc:
            raise InputError(str(exc), line) from None
    if "points" in keys:
        extra = keys - SPACE_KEYS - {"eta"}
        if extra:
            raise InputError(f"unknown keys {sorted(extra)}", _line_of(text, f'"{sorted(extra)[0]}"'))
        labels = _string_list(doc["points"], "points", _line_of(text, '"points"'))
        closed = doc.get("closed")
        line = _line_of(text, '"closed"')
        if not isinstance(closed, list) or not all(isinstance(c, list) for c in closed):
            raise InputError("closed must be an array of label arrays", line)
        try:
            return "space", from_closed_family(labels, closed)
        except ValueError as exc:
            raise InputError(str(exc), line) from None
    raise InputError("expected a poset ('elements') or a space ('points') document")


def poset_to_json(P: FinitePoset) -> dict:
    labels = [str(x) for x in P.labels]
    return {"elements": labels, "covers": [[labels[i], labels[j]] for i, j in P.cover_pairs()]}


def sorted_labels(X: FiniteSpace, mask: int) -> list:
    return sorted(str(X.labels[i]) for i in bits(mask))


def space_to_json(X: FiniteSpace) -> dict:
    closed = [sorted_labels(X, c) for c in X.closed]
    closed.sort(key=lambda s: (len(s), s))
    return {"points": [str(p) for p in X.labels], "closed": closed}


def _quote(s) -> str:
    return json.dumps(str(s))


def to_dot(P: FinitePoset, name: str = "hasse") -> str:
    """Hasse diagram drawn upward, nodes in canonical order."""
    order = canonical_labeling(P)
    pos = {v: k for k, v in enumerate(order)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for v in order:
        lines.append(f"  {_quote(P.labels[v])};")
    edges = sorted(P.cover_pairs(), key=lambda e: (pos[e[0]], pos[e[1]]))
    for i, j in edges:
        lines.append(f"  {_quote(P.labels[i])} -> {_quote(P.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
