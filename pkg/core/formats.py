# core/formats.py
#
# Graph text format:
#   graph <V> <E>
#   vertex <id> <label>        (V lines, ids ascending; label "-" when absent)
#   edge <u> <v> <num>/<den>   (E lines)

from .exceptions import FormatError, InvalidGraph, InvalidVertex, RationalParseError
from .models import WeightedGraph
from .rationals import format_rational, parse_length

NO_LABEL = '-'


def dump_graph(graph):
    lines = [f"graph {graph.vertex_count} {graph.edge_count}"]
    for v in range(graph.vertex_count):
        label = graph.label(v)
        if label is not None and (label == NO_LABEL or not label or any(c.isspace() for c in label)):
            raise FormatError(f"vertex {v} has a label that cannot be written: {label!r}")
        lines.append(f"vertex {v} {label if label is not None else NO_LABEL}")
    for u, v, length in graph.edges:
        lines.append(f"edge {u} {v} {format_rational(length)}")
    return '\n'.join(lines) + '\n'


def load_graph(text):
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty graph file")

    header = lines[0].split()
    if len(header) != 3 or header[0] != 'graph':
        raise FormatError("expected 'graph <V> <E>'", line=1)
    vertex_count, edge_count = _int(header[1], 1), _int(header[2], 1)
    if len(lines) != 1 + vertex_count + edge_count:
        raise FormatError(
            f"expected {1 + vertex_count + edge_count} lines, found {len(lines)}"
        )

    labels = []
    for offset in range(vertex_count):
        lineno = 2 + offset
        parts = lines[lineno - 1].split()
        if len(parts) != 3 or parts[0] != 'vertex':
            raise FormatError("expected 'vertex <id> <label>'", line=lineno)
        if _int(parts[1], lineno) != offset:
            raise FormatError(f"vertex ids must be 0..{vertex_count - 1} in order", line=lineno)
        labels.append(None if parts[2] == NO_LABEL else parts[2])

    edges = []
    for offset in range(edge_count):
        lineno = 2 + vertex_count + offset
        parts = lines[lineno - 1].split()
        if len(parts) != 4 or parts[0] != 'edge':
            raise FormatError("expected 'edge <u> <v> <num>/<den>'", line=lineno)
        try:
            length = parse_length(parts[3])
        except RationalParseError as exc:
            raise FormatError(str(exc), line=lineno) from exc
        edges.append((_int(parts[1], lineno), _int(parts[2], lineno), length))

    try:
        return WeightedGraph(
            vertex_count,
            tuple(edges),
            tuple(labels) if any(label is not None for label in labels) else (),
        )
    except (InvalidGraph, InvalidVertex) as exc:
        raise FormatError(str(exc)) from exc


def _int(text, lineno):
    if not text.isdigit():
        raise FormatError(f"expected a non-negative integer, got {text!r}", line=lineno)
    return int(text)
