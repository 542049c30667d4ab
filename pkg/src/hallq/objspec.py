"""Text format for derived objects: ``[mult*]label@shift + ...`` or ``0``."""
from __future__ import annotations

import re

from .derived import DObj
from .errors import BadLabel, BadParams, ParseError
from .quiverrep.quiver import QuiverPreset

_TERM = re.compile(r"^(?:(\d+)\*)?([^@]+)@(-?\d+)$")


def parse_objspec(Q: QuiverPreset, text: str) -> DObj:
    s = re.sub(r"\s+", "", text or "")
    if s == "":
        raise ParseError("empty object spec")
    if s == "0":
        return DObj.zero(Q)
    items = []
    for term in s.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"bad term {term!r} in {text!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        if mult < 1:
            raise ParseError(f"multiplicity must be positive in {term!r}")
        items += [(m.group(2), int(m.group(3)))] * mult
    try:
        return DObj.make(Q, items)
    except (BadLabel, BadParams) as exc:
        raise ParseError(str(exc)) from exc


def format_objspec(X: DObj) -> str:
    return str(X)
