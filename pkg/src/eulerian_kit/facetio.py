"""Facet file formats.

Plain format: one facet per line, whitespace-separated vertex tokens, `#`
starts a comment, blank lines are ignored.  JSON format: an object with a
"facets" key holding an array of arrays of string labels.  Parse failures
carry file/line/column diagnostics.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .complexes import SimplicialComplex
from .errors import InputError

_TOKEN = re.compile(r"\S+")

FORMATS = ("plain", "json")


def detect_format(path) -> str:
    return "json" if Path(path).suffix.lower() == ".json" else "plain"


def parse_plain(text: str, source: str = "<plain>") -> list[list[str]]:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        cut = raw.find("#")
        content = raw[:cut] if cut >= 0 else raw
        row = []
        seen = set()
        for m in _TOKEN.finditer(content):
            tok = m.group()
            if tok in seen:
                raise InputError(
                    f"{source}:{lineno}:{m.start() + 1}: repeated vertex {tok!r} in facet"
                )
            seen.add(tok)
            row.append(tok)
        if row:
            facets.append(row)
    return facets


def parse_json_facets(text: str, source: str = "<json>") -> list[list[str]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or "facets" not in doc:
        raise InputError(f"{source}: expected an object with a 'facets' key")
    facets = doc["facets"]
    if not isinstance(facets, list):
        raise InputError(f"{source}: 'facets' must be an array")
    for i, row in enumerate(facets):
        if not isinstance(row, list) or not all(isinstance(t, str) for t in row):
            raise InputError(f"{source}: facet {i} must be an array of strings")
    return facets


def read_facets(path, fmt: str | None = None) -> list[list[str]]:
    fmt = fmt or detect_format(path)
    if fmt not in FORMATS:
        raise InputError(f"unknown facet format {fmt!r}")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from None
    except UnicodeDecodeError as e:
        raise InputError(f"{path}: not valid UTF-8 ({e.reason})") from None
    parse = parse_plain if fmt == "plain" else parse_json_facets
    return parse(text, source=str(path))


def load_complex(path, fmt: str | None = None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(read_facets(path, fmt))


def facet_rows(K: SimplicialComplex) -> list[list[str]]:
    """Facets as label lists, in (dimension, lexicographic) order."""
    return [list(K.labels_of(f)) for f in K.facets]


def write_facets(K: SimplicialComplex, path, fmt: str = "plain") -> None:
    rows = facet_rows(K)
    if fmt == "plain":
        for row in rows:
            for tok in row:
                if "#" in tok:
                    raise InputError(
                        f"label {tok!r} cannot round-trip in plain format; use json"
                    )
        text = "".join(" ".join(row) + "\n" for row in rows)
    elif fmt == "json":
        text = json.dumps({"facets": rows}, indent=2) + "\n"
    else:
        raise InputError(f"unknown facet format {fmt!r}")
    Path(path).write_text(text, encoding="utf-8")
