# structure/models.py

from dataclasses import dataclass, field
from fractions import Fraction


# ============================
# PATH DECOMPOSITION
# ============================
@dataclass(frozen=True)
class PathDecomposition:
    """ Bags in path order; each bag is a frozenset of vertex ids. """
    bags: tuple

    @property
    def width(self):
        return max((len(bag) for bag in self.bags), default=0) - 1


@dataclass(frozen=True)
class PathDecompositionReport:
    valid: bool
    width: int
    violations: tuple = ()


# ============================
# HUBS
# ============================
@dataclass(frozen=True)
class HubSet:
    """ H_r for scale r; `regime` says which of the three constructions built it. """
    scale: Fraction
    constant_c: Fraction
    hubs: frozenset
    regime: str = ''

    def __len__(self):
        return len(self.hubs)


@dataclass(frozen=True)
class HubReport:
    """ Vertex pairs joined by a hub-free shortest path longer than r, and the densest c*r ball. """
    violations: tuple
    max_hubs_in_ball: int
    densest_center: int = None


# ============================
# DOUBLING
# ============================
@dataclass(frozen=True)
class CoverReport:
    center: int
    radius: Fraction
    ball_size: int
    cover_count: int
    exact: bool
    case_bound: int = None


# ============================
# GADGET DISTANCES
# ============================
@dataclass(frozen=True)
class ClaimReport:
    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    violations: tuple = field(default=())


@dataclass(frozen=True)
class RadiiReport:
    """ inradius is None when V_{i,j}(a) is the whole graph. """
    cell: tuple
    a: int
    circumradius: Fraction
    inradius: Fraction
    circumradius_bound: Fraction
    inradius_bound: Fraction
    violations: tuple = field(default=())
