"""Read and write hypergraph instance files (line-oriented text or JSON)."""

import json
from typing import List, Optional

from pydantic import BaseModel, ValidationError, field_validator

from hypergraph import HypergraphError, build, members


class ParseError(HypergraphError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class InputDocument(BaseModel):
    """Structured instance: optional vertex order plus edges as label lists."""

    vertices: Optional[List[str]] = None
    edges: List[List[str]] = []

    @field_validator("vertices")
    @classmethod
    def distinct_vertices(cls, value):
        if value is not None and len(set(value)) != len(value):
            raise ValueError("vertex labels must be distinct")
        return value

    @field_validator("edges")
    @classmethod
    def no_repeated_labels(cls, value):
        for k, edge in enumerate(value):
            if len(set(edge)) != len(edge):
                raise ValueError(f"edge {k} repeats a vertex")
        return value


def detect_format(content):
    """'json' for a structured document, 'text' otherwise (including empty input)."""
    stripped = (content or "").lstrip("\ufeff").strip()
    if stripped.startswith("{"):
        return "json"
    return "text"


class _Labels:
    """Label -> index map; auto-registers unknown labels unless fixed."""

    def __init__(self, fixed=None):
        self.order = list(fixed or [])
        self.index = {label: k for k, label in enumerate(self.order)}
        self.fixed = fixed is not None

    def resolve(self, label):
        if label not in self.index:
            if self.fixed:
                return None
            self.index[label] = len(self.order)
            self.order.append(label)
        return self.index[label]


def _attach_location(err, where):
    """Prefix a build() error with the source lines of the edges it names."""
    positions = getattr(err, "positions", None)
    if positions is None and getattr(err, "position", None) is not None:
        positions = (err.position,)
    if not positions:
        return err
    lines = [where[p] for p in positions]
    err.lines = lines
    err.args = (f"{', '.join(f'line {n}' for n in lines)}: {err.args[0]}",)
    return err


def _tokens(text, offset):
    """(token, 1-based column) pairs of whitespace-separated words."""
    out = []
    col = 0
    for word in text.split():
        col = text.index(word, col)
        out.append((word, offset + col + 1))
        col += len(word)
    return out


def _parse_text(content):
    labels = None
    edges = []
    where = []
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        key_col = len(key) - len(key.lstrip()) + 1
        if not sep:
            raise ParseError("expected 'vertices:' or 'edge:'", lineno, key_col)
        key = key.strip().lower()
        words = _tokens(rest, len(line) - len(rest))
        if key == "vertices":
            if labels is not None:
                raise ParseError("second 'vertices:' line", lineno, key_col)
            if edges:
                raise ParseError("'vertices:' must come before the first edge", lineno, key_col)
            seen = {}
            for word, col in words:
                if word in seen:
                    raise ParseError(f"vertex {word!r} listed twice", lineno, col)
                seen[word] = col
            labels = _Labels([w for w, _ in words])
        elif key == "edge":
            if labels is None:
                labels = _Labels()
            edge = []
            for word, col in words:
                v = labels.resolve(word)
                if v is None:
                    raise ParseError(f"unknown vertex {word!r}", lineno, col)
                if v in edge:
                    raise ParseError(f"vertex {word!r} repeated in edge", lineno, col)
                edge.append(v)
            edges.append(edge)
            where.append(lineno)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, key_col)
    if labels is None:
        labels = _Labels()
    try:
        return build(len(labels.order), edges, labels.order)
    except HypergraphError as err:
        raise _attach_location(err, where)


def _parse_json(content):
    try:
        data = json.loads(content.lstrip("\ufeff"))
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, err.lineno, err.colno) from err
    try:
        doc = InputDocument.model_validate(data)
    except ValidationError as err:
        first = err.errors()[0]
        path = ".".join(str(p) for p in first["loc"])
        raise ParseError(f"{path}: {first['msg']}") from err
    return document_to_hypergraph(doc)


def document_to_hypergraph(doc):
    labels = _Labels(doc.vertices)
    edges = []
    for k, edge in enumerate(doc.edges):
        resolved = []
        for label in edge:
            v = labels.resolve(label)
            if v is None:
                raise ParseError(f"edges.{k}: unknown vertex {label!r}")
            resolved.append(v)
        edges.append(resolved)
    return build(len(labels.order), edges, labels.order)


def parse(content, fmt=None):
    """Parse instance text into a Hypergraph.

    Args:
        content: file contents.
        fmt: 'text' or 'json'; sniffed from the content when omitted.
    """
    fmt = fmt or detect_format(content)
    if fmt == "json":
        return _parse_json(content)
    if fmt == "text":
        return _parse_text(content or "")
    raise ParseError(f"unknown input format {fmt!r}")


def load(path, fmt=None):
    with open(path, encoding="utf-8-sig") as f:
        return parse(f.read(), fmt)


def to_document(hypergraph):
    return InputDocument(
        vertices=list(hypergraph.labels),
        edges=[[hypergraph.labels[v] for v in members(e)] for e in hypergraph.edges],
    )


def render_text(hypergraph):
    """Canonical text form; parse(render_text(H)) == H."""
    for label in hypergraph.labels:
        if not label or any(c.isspace() or c in "#:" for c in label):
            raise HypergraphError(f"Label {label!r} cannot be written in the text format; use json")
    lines = []
    if hypergraph.n:
        lines.append("vertices: " + " ".join(hypergraph.labels))
    for e in hypergraph.edges:
        lines.append("edge: " + " ".join(hypergraph.labels[v] for v in members(e)))
    return "\n".join(lines) + "\n"


def render_json(hypergraph):
    return to_document(hypergraph).model_dump_json(indent=2) + "\n"
