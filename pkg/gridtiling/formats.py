# gridtiling/formats.py
#
# GT text format:
#   gt <kappa> <n>
#   set <i> <j> : a1,b1 a2,b2 ...     (one line per set, row-major)

from core.exceptions import FormatError

from .exceptions import InvalidInstance
from .models import GTInstance


def dump_gt(instance):
    lines = [f"gt {instance.kappa} {instance.n}"]
    for i, j in instance.cells():
        pairs = ' '.join(f"{a},{b}" for a, b in instance.cell(i, j))
        lines.append(f"set {i} {j} : {pairs}")
    return '\n'.join(lines) + '\n'


def load_gt(text):
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty GT file")

    header = lines[0].split()
    if len(header) != 3 or header[0] != 'gt' or not header[1].isdigit() or not header[2].isdigit():
        raise FormatError("expected 'gt <kappa> <n>'", line=1)
    kappa, n = int(header[1]), int(header[2])
    if len(lines) != 1 + kappa * kappa:
        raise FormatError(f"expected {kappa * kappa} set lines, found {len(lines) - 1}")

    sets = [[None] * kappa for _ in range(kappa)]
    expected = [(i, j) for i in range(1, kappa + 1) for j in range(1, kappa + 1)]
    for lineno, (line, (i, j)) in enumerate(zip(lines[1:], expected), start=2):
        head, sep, body = line.partition(':')
        parts = head.split()
        if not sep or len(parts) != 3 or parts[0] != 'set':
            raise FormatError("expected 'set <i> <j> : a,b ...'", line=lineno)
        if parts[1:] != [str(i), str(j)]:
            raise FormatError(f"expected set {i} {j} (row-major order)", line=lineno)
        cell = []
        for token in body.split():
            a, comma, b = token.partition(',')
            if not comma or not a.isdigit() or not b.isdigit():
                raise FormatError(f"malformed pair {token!r}", line=lineno)
            cell.append((int(a), int(b)))
        sets[i - 1][j - 1] = cell

    try:
        return GTInstance.from_lists(kappa, n, sets)
    except InvalidInstance as exc:
        raise FormatError(str(exc)) from exc
