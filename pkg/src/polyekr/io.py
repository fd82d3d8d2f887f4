"""JSON forms of families and reports.

Family files look like::

    {"field": {"p": 2, "k": 1, "modulus": null},
     "ell": 1,
     "polys": [[0, 0, 1, 1],
               [0, 1, 0, 1]]}

Polynomials are coefficient-index arrays, constant term first.
"""
from __future__ import annotations

import json
import re

from .config import Guards
from .constructions import Family
from .field import field_from_json
from .poly import Poly


class FamilyFormatError(ValueError):
    pass


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def dump_family(fam: Family) -> str:
    """One polynomial per line, so loader errors can point at a line."""
    head = json.dumps(fam.field.to_json(), sort_keys=True)
    polys = ",\n    ".join(json.dumps(p.to_json()) for p in fam.members)
    return f'{{"field": {head},\n  "ell": {fam.ell},\n  "polys": [\n    {polys}\n  ]\n}}\n'


def _entry_lines(text: str) -> list[int]:
    """Line number of each innermost array inside the "polys" value."""
    m = re.search(r'"polys"\s*:\s*\[', text)
    if not m:
        return []
    return [text.count("\n", 0, a.start()) + 1
            for a in re.compile(r"\[[^\[\]]*\]").finditer(text, m.end())]


def load_family(text: str, source: str = "<family>", guards: Guards | None = None) -> Family:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"{source}:{exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise FamilyFormatError(f"{source}:1: expected a JSON object")
    for key in ("field", "ell", "polys"):
        if key not in obj:
            raise FamilyFormatError(f"{source}:1: missing key {key!r}")
    try:
        f = field_from_json(obj["field"], guards)
    except (ValueError, KeyError, TypeError) as exc:
        raise FamilyFormatError(f"{source}:1: bad field: {exc}") from None
    ell = obj["ell"]
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
        raise FamilyFormatError(f"{source}:1: ell must be a non-negative integer")
    if not isinstance(obj["polys"], list):
        raise FamilyFormatError(f"{source}:1: polys must be an array")
    lines = _entry_lines(text)
    polys, seen = [], {}
    for i, raw in enumerate(obj["polys"]):
        where = f"{source}:{lines[i] if i < len(lines) else 1}: polys[{i}]"
        if not isinstance(raw, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in raw):
            raise FamilyFormatError(f"{where}: expected an array of integers")
        try:
            p = Poly(f, raw)
        except ValueError as exc:
            raise FamilyFormatError(f"{where}: {exc}") from None
        if list(p.coeffs) != raw:
            raise FamilyFormatError(f"{where}: trailing zero coefficients")
        if not p.is_monic():
            raise FamilyFormatError(f"{where}: polynomial is not monic")
        if p in seen:
            raise FamilyFormatError(f"{where}: duplicate of polys[{seen[p]}]")
        seen[p] = i
        polys.append(p)
    if not polys:
        raise FamilyFormatError(f"{source}:1: family is empty")
    try:
        return Family.of(f, polys, ell)
    except ValueError as exc:
        raise FamilyFormatError(f"{source}:1: {exc}") from None


def read_family(path, guards: Guards | None = None) -> Family:
    with open(path, encoding="utf-8") as fh:
        return load_family(fh.read(), str(path), guards)


def family_from_json(obj: dict, guards: Guards | None = None) -> Family:
    return load_family(json.dumps(obj), guards=guards)
