"""JSON presentation documents: explicit labels, pair set, canonical triples."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

from .linkgraph import FSet
from .tripres import TrianglePresentation


class ParseError(ValueError):
    """Malformed presentation document; the message names the offending key."""


@dataclass(frozen=True)
class Document:
    """A pair set and a presentation over one explicit label list, plus
    free-form metadata."""

    F: FSet
    T: TrianglePresentation
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.F.labels != self.T.labels:
            raise ValueError("F and T must share one label list")

    @property
    def labels(self):
        return self.T.labels


def _closure(triples):
    closed = set()
    for i, j, k in triples:
        closed.update(((i, j, k), (j, k, i), (k, i, j)))
    return closed


def dump_document(doc: Document) -> str:
    """Canonical text: labels explicit, pairs sorted, one triple per orbit."""
    pos = doc.T.position()
    blob = {
        "n": len(doc.labels),
        "labels": list(doc.labels),
        "F": [list(p) for p in sorted(doc.F.pairs, key=lambda p: (pos[p[0]], pos[p[1]]))],
        "T": [list(t) for t in doc.T.canonical_reps()],
        "meta": doc.meta,
    }
    return json.dumps(blob, sort_keys=True, indent=2) + "\n"


def save_document(doc: Document, path) -> None:
    with open(path, "w") as fh:
        fh.write(dump_document(doc))


def _expect(blob, key, kind, where):
    if key not in blob:
        raise ParseError(f"{where}: missing key {key!r}")
    value = blob[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}")
    return value


def parse_document(text: str, strict: bool = True) -> Document:
    """Read the document schema back; strict mode insists the triple list is
    either a full rotation closure or exactly the canonical representatives,
    while lenient mode closes anything else with a warning."""
    try:
        blob = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(
            f"line {err.lineno} column {err.colno}: {err.msg}"
        ) from None
    if not isinstance(blob, dict):
        raise ParseError("top level: expected an object")
    n = _expect(blob, "n", int, "document")
    if n < 0:
        raise ParseError("document.n: negative")
    if "labels" in blob:
        labels = _expect(blob, "labels", list, "document")
        if len(labels) != n:
            raise ParseError(f"document.labels: {len(labels)} entries, n = {n}")
        if any(not isinstance(l, int) for l in labels):
            raise ParseError("document.labels: entries must be integers")
        if len(set(labels)) != n:
            raise ParseError("document.labels: duplicates")
    else:
        labels = list(range(1, n + 1))
    known = set(labels)
    pairs = []
    for i, entry in enumerate(_expect(blob, "F", list, "document")):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"F[{i}]: expected a pair")
        for x in entry:
            if x not in known:
                raise ParseError(f"F[{i}]: index {x} outside the label set")
        pairs.append(tuple(entry))
    triples = []
    for i, entry in enumerate(_expect(blob, "T", list, "document")):
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError(f"T[{i}]: expected a triple")
        for x in entry:
            if x not in known:
                raise ParseError(f"T[{i}]: index {x} outside the label set")
        triples.append(tuple(entry))
    meta = blob.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError("document.meta: expected an object")
    listed = set(triples)
    T = TrianglePresentation(tuple(labels), frozenset(triples))
    canonical = set(T.canonical_reps())
    if listed != set(T.triples) and listed != canonical:
        if strict:
            raise ParseError(
                "T: not rotation-closed and not the canonical representatives"
            )
        warnings.warn("triple list was not rotation-closed; closing it")
    F = FSet(tuple(labels), frozenset(pairs))
    return Document(F=F, T=T, meta=meta)


def load_document(path, strict: bool = True) -> Document:
    with open(path) as fh:
        return parse_document(fh.read(), strict=strict)
