# kcenter/models.py

from dataclasses import dataclass
from fractions import Fraction

from django.db import models

from core.rationals import format_rational


class Status(models.TextChoices):
    SAT = 'SAT', 'Satisfiable'
    UNSAT = 'UNSAT', 'Certified infeasible'
    OPTIMAL = 'OPTIMAL', 'Optimal'


# ============================
# CENTER SET
# ============================
@dataclass(frozen=True)
class CenterSet:
    """ A set C of point ids. Iteration is always in ascending id order. """
    centers: frozenset

    @classmethod
    def of(cls, ids):
        return cls(frozenset(int(v) for v in ids))

    def __len__(self):
        return len(self.centers)

    def __iter__(self):
        return iter(sorted(self.centers))

    def __contains__(self, vertex):
        return vertex in self.centers

    def ids(self):
        return sorted(self.centers)

    def __str__(self):
        return ','.join(str(v) for v in self.ids())


# ============================
# SOLVE OUTCOME
# ============================
@dataclass(frozen=True)
class SolveOutcome:
    """
    SAT/OPTIMAL carry the centers and their exact cost; UNSAT carries the
    radius that was certified infeasible.
    """
    status: str
    centers: CenterSet = None
    cost: Fraction = None
    radius: Fraction = None

    @classmethod
    def unsat(cls, radius):
        return cls(Status.UNSAT, radius=Fraction(radius))

    def line(self):
        if self.status == Status.UNSAT:
            return f"UNSAT radius={format_rational(self.radius)}"
        return f"{self.status} cost={format_rational(self.cost)} centers={self.centers}"


# ============================
# NET
# ============================
@dataclass(frozen=True)
class Net:
    """ A delta-net: covers every point within delta, net points pairwise > delta apart. """
    points: tuple
    delta: Fraction

    def __len__(self):
        return len(self.points)
