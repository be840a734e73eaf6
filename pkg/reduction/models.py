# reduction/models.py

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

CYCLE, Y, PATH_P, PATH_PPRIME = 'cycle', 'y', 'pathP', 'pathPprime'
CONNECTOR_KINDS = ('x1', 'x2', 'x3', 'x4')
KINDS = (CYCLE,) + CONNECTOR_KINDS + (Y, PATH_P, PATH_PPRIME)
POSITIONED_KINDS = (CYCLE, PATH_P, PATH_PPRIME)


def cycle_length(n):
    return 16 * n * n + 4


def quarter(n):
    """ Distance 4n^2+1 between the four cycle vertices of one element. """
    return 4 * n * n + 1


# ============================
# VERTEX ROLE
# ============================
@dataclass(frozen=True)
class VertexRole:
    """
    What a vertex of G_I is: a cycle vertex O_{i,j}[pos], a connector x^q_{i,j},
    the hub y_{i,j}, or interior vertex pos (1..n+1) of P_{i,j} / P'_{i,j}.
    """
    kind: str
    i: int
    j: int
    pos: int = None

    @property
    def name(self):
        if self.kind == CYCLE:
            return f"O{self.i}.{self.j}:{self.pos}"
        if self.kind == Y:
            return f"y{self.i}.{self.j}"
        if self.kind == PATH_P:
            return f"P{self.i}.{self.j}:{self.pos}"
        if self.kind == PATH_PPRIME:
            return f"Q{self.i}.{self.j}:{self.pos}"
        return f"{self.kind}.{self.i}.{self.j}"

    @property
    def cell(self):
        return (self.i, self.j)


def standard_roles(kappa, n):
    """
    The fixed id layout: gadgets row-major (cycle positions ascending, then
    x1..x4, then y), then every P_{i,j} row-major, then every P'_{i,j}.
    """
    roles = []
    cells = [(i, j) for i in range(1, kappa + 1) for j in range(1, kappa + 1)]
    for i, j in cells:
        roles.extend(VertexRole(CYCLE, i, j, pos) for pos in range(1, cycle_length(n) + 1))
        roles.extend(VertexRole(kind, i, j) for kind in CONNECTOR_KINDS)
        roles.append(VertexRole(Y, i, j))
    for i, j in cells:
        if j < kappa:
            roles.extend(VertexRole(PATH_P, i, j, pos) for pos in range(1, n + 2))
    for i, j in cells:
        if i < kappa:
            roles.extend(VertexRole(PATH_PPRIME, i, j, pos) for pos in range(1, n + 2))
    return tuple(roles)


# ============================
# LABEL MAP
# ============================
@dataclass(frozen=True)
class LabelMap:
    """ roles[id] names every vertex of G_I; the roles partition V exactly. """
    kappa: int
    n: int
    roles: tuple

    def __post_init__(self):
        expected = standard_roles(self.kappa, self.n)
        duplicates = [role for role, count in Counter(self.roles).items() if count > 1]
        if duplicates:
            raise ValueError(f"role {duplicates[0].name} is assigned to more than one vertex")
        if set(self.roles) != set(expected):
            raise ValueError("roles do not partition the vertices of G_I")

    @classmethod
    def standard(cls, kappa, n):
        return cls(kappa, n, standard_roles(kappa, n))

    @cached_property
    def _ids(self):
        return {role: vertex for vertex, role in enumerate(self.roles)}

    @property
    def vertex_count(self):
        return len(self.roles)

    @property
    def cycle_length(self):
        return cycle_length(self.n)

    def role(self, vertex):
        return self.roles[vertex]

    def cycle_vertex(self, i, j, pos):
        """ v_pos on O_{i,j}; positions wrap (L + 1 is 1). """
        pos = (pos - 1) % self.cycle_length + 1
        return self._ids[VertexRole(CYCLE, i, j, pos)]

    def cycle(self, i, j):
        return tuple(self.cycle_vertex(i, j, pos) for pos in range(1, self.cycle_length + 1))

    def x(self, q, i, j):
        return self._ids[VertexRole(f"x{q}", i, j)]

    def y(self, i, j):
        return self._ids[VertexRole(Y, i, j)]

    def path_p(self, i, j):
        """ P_{i,j} as (u_0 = x2_{i,j}, interior..., u_{n+2} = x4_{i,j+1}). """
        interior = [self._ids[VertexRole(PATH_P, i, j, pos)] for pos in range(1, self.n + 2)]
        return (self.x(2, i, j), *interior, self.x(4, i, j + 1))

    def path_pprime(self, i, j):
        """ P'_{i,j} as (u_0 = x3_{i,j}, interior..., u_{n+2} = x1_{i+1,j}). """
        interior = [self._ids[VertexRole(PATH_PPRIME, i, j, pos)] for pos in range(1, self.n + 2)]
        return (self.x(3, i, j), *interior, self.x(1, i + 1, j))

    def cells(self):
        return [(i, j) for i in range(1, self.kappa + 1) for j in range(1, self.kappa + 1)]

    def connectors(self):
        """ X: every y_{i,j} and x^q_{i,j} (5 kappa^2 vertices). """
        return frozenset(
            vertex for vertex, role in enumerate(self.roles)
            if role.kind == Y or role.kind in CONNECTOR_KINDS
        )

    def gadget_vertices(self, i, j):
        """ V(G_{i,j}): the cycle, the four connectors and y. """
        return frozenset(self.cycle(i, j)) | {self.x(q, i, j) for q in range(1, 5)} | {self.y(i, j)}


# ============================
# REDUCTION INSTANCE
# ============================
@dataclass(frozen=True)
class ReductionInstance:
    """ G_I with its labels, budget k = 5 kappa^2 and threshold 2n^2. """
    graph: object
    labels: LabelMap
    k: int
    threshold: Fraction
    source: object

    @property
    def kappa(self):
        return self.labels.kappa

    @property
    def n(self):
        return self.labels.n


# ============================
# GAP WITNESS
# ============================
@dataclass(frozen=True)
class GapWitness:
    """
    Two neighbouring gadgets whose picks break the order along `direction`
    ('row' for b <= b' over P, 'column' for a <= a' over P'), the exact
    distance between their closest chosen cycle centers, and the interior
    vertices of the connecting path that no center covers at radius 2n^2.
    """
    direction: str
    cell: tuple
    neighbour: tuple
    distance: Fraction
    uncovered: tuple
