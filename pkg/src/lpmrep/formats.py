"""JSON encodings.

Presentation: ``{"n": 4, "intervals": [[1, 2], [1, 4]], "partition": [1, 3]}``
(partition optional).  Field descriptor: ``{"p": "37", "s": 1}`` for a prime
field, ``{"p": "2", "s": 3, "modulus": [1, 1, 0, 1]}`` for an extension.
Prime-field elements are decimal strings, extension elements coefficient
lists, lowest degree first.  Everything is 1-indexed.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidPresentation
from .ff import ExtensionField, FieldElement, FieldMatrix, PrimeField
from .matroid import GroundPartition, IntervalPresentation
from .representation import Representation


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def presentation_from_json(data: dict) -> tuple[IntervalPresentation, GroundPartition | None]:
    if not isinstance(data, dict) or "n" not in data or "intervals" not in data:
        raise InvalidPresentation('presentation needs "n" and "intervals"')
    try:
        n = int(data["n"])
        intervals = tuple((int(a), int(b)) for a, b in data["intervals"])
    except (TypeError, ValueError) as exc:
        raise InvalidPresentation(f"malformed presentation: {exc}") from None
    p = IntervalPresentation(n, intervals)
    part = data.get("partition")
    return p, (GroundPartition(n, tuple(int(t) for t in part)) if part is not None else None)


def presentation_to_json(p: IntervalPresentation, part: GroundPartition | None = None) -> dict:
    out: dict = {"n": p.n, "intervals": [list(iv) for iv in p.intervals]}
    if part is not None:
        out["partition"] = list(part.thresholds)
    return out


def field_to_json(F) -> dict:
    if isinstance(F, PrimeField):
        return {"p": str(F.p), "s": 1}
    return {"p": str(F.p), "s": F.degree, "modulus": list(F.modulus)}


def field_from_json(data: dict):
    p = int(data["p"])
    if "modulus" not in data:
        if int(data.get("s", 1)) != 1:
            raise InvalidPresentation("extension field descriptor lacks a modulus")
        return PrimeField(p)
    F = ExtensionField(p, [int(c) for c in data["modulus"]])
    if F.degree != int(data["s"]):
        raise InvalidPresentation("field degree does not match the modulus")
    return F


def raw_to_json(F, v):
    return str(v) if isinstance(F, PrimeField) else list(v)


def element_to_json(e: FieldElement):
    return raw_to_json(e.field, e.value)


def element_from_json(F, data) -> FieldElement:
    if isinstance(F, PrimeField):
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            raise InvalidPresentation(f"prime-field element must be a decimal string, got {data!r}")
        v = int(data)
        if not 0 <= v < F.p:
            raise InvalidPresentation(f"residue {v} outside [0, {F.p})")
        return F(v)
    if isinstance(data, int) and not isinstance(data, bool):
        return F(data)
    if not isinstance(data, list) or len(data) != F.degree or not all(isinstance(c, int) and 0 <= c < F.p for c in data):
        raise InvalidPresentation(f"extension element must be {F.degree} coefficients in [0, {F.p}), got {data!r}")
    return F(data)


def representation_to_json(rep: Representation) -> dict:
    F = rep.field
    return {
        "field": field_to_json(F),
        "rows": rep.rows,
        "cols": rep.cols,
        "entries": [[raw_to_json(F, v) for v in row] for row in rep.matrix.rows],
        "provenance": rep.provenance,
    }


def representation_from_json(data: dict) -> Representation:
    F = field_from_json(data["field"])
    entries = [[element_from_json(F, v) for v in row] for row in data["entries"]]
    m = FieldMatrix(F, entries)
    if m.nrows != int(data["rows"]) or m.ncols != int(data["cols"]):
        raise InvalidPresentation("entries do not match the declared rows/cols")
    return Representation(F, m, dict(data.get("provenance", {})))


def shares_to_json(scheme_ref: str, p_o: int, shares: dict[int, FieldElement]) -> dict:
    return {"scheme": scheme_ref, "p_o": p_o, "shares": {str(x): element_to_json(e) for x, e in sorted(shares.items())}}


def shares_from_json(F, data: dict) -> tuple[int, dict[int, FieldElement]]:
    return int(data["p_o"]), {int(x): element_from_json(F, v) for x, v in data["shares"].items()}


def load_json(source: str) -> Any:
    """Parse ``source`` as inline JSON if it looks like JSON, else read it as a path."""
    text = source.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    return json.loads(Path(source).read_text())
