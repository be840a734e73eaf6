# reduction/formats.py
#
# Label sidecar format:
#   labels <kappa> <n> <V>
#   role <id> <kind> <i> <j> [<pos>]     (V lines, ids ascending)
# kind is one of cycle, x1..x4, y, pathP, pathPprime; pos only for cycle/pathP/pathPprime.

from fractions import Fraction

from core.exceptions import FormatError
from gridtiling.exceptions import InvalidInstance
from gridtiling.models import GTInstance

from .builder import build_reduction
from .models import KINDS, POSITIONED_KINDS, LabelMap, VertexRole, quarter


def dump_labels(labels):
    lines = [f"labels {labels.kappa} {labels.n} {labels.vertex_count}"]
    for vertex, role in enumerate(labels.roles):
        pos = f" {role.pos}" if role.kind in POSITIONED_KINDS else ''
        lines.append(f"role {vertex} {role.kind} {role.i} {role.j}{pos}")
    return '\n'.join(lines) + '\n'


def load_labels(text):
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty label file")

    header = lines[0].split()
    if len(header) != 4 or header[0] != 'labels' or not all(part.isdigit() for part in header[1:]):
        raise FormatError("expected 'labels <kappa> <n> <V>'", line=1)
    kappa, n, vertex_count = (int(part) for part in header[1:])
    if len(lines) != 1 + vertex_count:
        raise FormatError(f"expected {1 + vertex_count} lines, found {len(lines)}")

    roles = []
    for offset in range(vertex_count):
        lineno = 2 + offset
        parts = lines[lineno - 1].split()
        if len(parts) < 5 or parts[0] != 'role' or parts[2] not in KINDS:
            raise FormatError("expected 'role <id> <kind> <i> <j> [<pos>]'", line=lineno)
        expected = 6 if parts[2] in POSITIONED_KINDS else 5
        if len(parts) != expected or not all(part.isdigit() for part in parts[1:2] + parts[3:]):
            raise FormatError(f"malformed role line for kind {parts[2]}", line=lineno)
        if int(parts[1]) != offset:
            raise FormatError(f"role ids must be 0..{vertex_count - 1} in order", line=lineno)
        pos = int(parts[5]) if expected == 6 else None
        roles.append(VertexRole(parts[2], int(parts[3]), int(parts[4]), pos))

    try:
        return LabelMap(kappa, n, tuple(roles))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_reduction(graph, labels_text):
    """
    Rebuilds a ReductionInstance from a loaded graph and its sidecar. The GT
    instance is read back from the x1 and x4 edge lengths, G_I is rebuilt from
    it, and the file is rejected unless the rebuild matches edge for edge.
    """
    labels = load_labels(labels_text)
    if graph.vertex_count != labels.vertex_count:
        raise FormatError(f"graph has {graph.vertex_count} vertices, labels describe {labels.vertex_count}")

    gt = _recover_instance(graph, labels)
    inst = build_reduction(gt)
    if inst.labels.roles != labels.roles or set(inst.graph.edges) != set(graph.edges):
        raise FormatError("graph is not the reduction graph its labels describe")
    return inst


def _recover_instance(graph, labels):
    n = labels.n
    two_n_sq = Fraction(2 * n * n)
    shift = 3 * quarter(n)
    x1_of = {labels.x(1, i, j): (i, j) for i, j in labels.cells()}
    x4_of = {labels.x(4, i, j): (i, j) for i, j in labels.cells()}
    a_values = {cell: {} for cell in labels.cells()}
    b_values = {cell: {} for cell in labels.cells()}

    for u, v, length in graph.edges:
        for connector, other in ((u, v), (v, u)):
            role = labels.role(other)
            if role.kind != 'cycle':
                continue
            if connector in x1_of and role.cell == x1_of[connector]:
                a_values[role.cell][role.pos] = (two_n_sq - length) * (n + 1)
            elif connector in x4_of and role.cell == x4_of[connector]:
                b_values[role.cell][role.pos - shift] = (two_n_sq - length) * (n + 1)

    sets = []
    for i in range(1, labels.kappa + 1):
        row = []
        for j in range(1, labels.kappa + 1):
            a_by_tau, b_by_tau = a_values[(i, j)], b_values[(i, j)]
            taus = sorted(a_by_tau)
            if taus != list(range(1, len(taus) + 1)) or sorted(b_by_tau) != taus:
                raise FormatError(f"element edges of gadget ({i},{j}) do not index 1..sigma")
            pairs = []
            for tau in taus:
                a, b = a_by_tau[tau], b_by_tau[tau]
                if a.denominator != 1 or b.denominator != 1:
                    raise FormatError(f"element {tau} of gadget ({i},{j}) has a non-integral coordinate")
                pairs.append((int(a), int(b)))
            row.append(pairs)
        sets.append(row)

    try:
        return GTInstance.from_lists(labels.kappa, n, sets)
    except InvalidInstance as exc:
        raise FormatError(f"recovered instance is invalid: {exc}") from exc
