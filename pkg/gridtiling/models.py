# gridtiling/models.py

from dataclasses import dataclass

from .exceptions import IndexOutOfRange, InvalidInstance


# ============================
# GT INSTANCE
# ============================
@dataclass(frozen=True)
class GTInstance:
    """
    kappa x kappa grid of ordered sets S_{i,j} of pairs (a, b) in [n]^2.
    Grid coordinates (i, j) and element indices tau are 1-based; the order of
    each set is fixed here and defines tau.
    """
    kappa: int
    n: int
    sets: tuple

    def __post_init__(self):
        if self.kappa < 1:
            raise InvalidInstance(f"kappa must be at least 1, got {self.kappa}")
        if self.n < 2:
            raise InvalidInstance(f"n must be at least 2, got {self.n}")
        if len(self.sets) != self.kappa or any(len(row) != self.kappa for row in self.sets):
            raise InvalidInstance(f"expected a {self.kappa}x{self.kappa} grid of sets")
        for i, row in enumerate(self.sets, start=1):
            for j, cell in enumerate(row, start=1):
                if not cell:
                    raise InvalidInstance(f"S_{i},{j} is empty")
                if len(set(cell)) != len(cell):
                    raise InvalidInstance(f"S_{i},{j} repeats a pair")
                for a, b in cell:
                    if not (1 <= a <= self.n and 1 <= b <= self.n):
                        raise InvalidInstance(f"S_{i},{j} holds ({a},{b}) outside [{self.n}]^2")

    @classmethod
    def from_lists(cls, kappa, n, sets):
        """ Nested lists (row-major) of (a, b) pairs to an immutable instance. """
        return cls(kappa, n, tuple(
            tuple(tuple((int(a), int(b)) for a, b in cell) for cell in row)
            for row in sets
        ))

    def cell(self, i, j):
        """ The ordered set S_{i,j}. """
        if not (1 <= i <= self.kappa and 1 <= j <= self.kappa):
            raise IndexOutOfRange(f"cell ({i},{j}) outside the {self.kappa}x{self.kappa} grid")
        return self.sets[i - 1][j - 1]

    def pair(self, i, j, tau):
        """ s_tau of S_{i,j}. """
        cell = self.cell(i, j)
        if not 1 <= tau <= len(cell):
            raise IndexOutOfRange(f"tau={tau} outside 1..{len(cell)} for S_{i},{j}")
        return cell[tau - 1]

    def cells(self):
        """ (i, j) in row-major order. """
        return [(i, j) for i in range(1, self.kappa + 1) for j in range(1, self.kappa + 1)]


# ============================
# GT ASSIGNMENT
# ============================
@dataclass(frozen=True)
class GTAssignment:
    """ picks[i-1][j-1] = tau_{i,j}, the chosen index into S_{i,j}. """
    picks: tuple

    @classmethod
    def from_lists(cls, picks):
        return cls(tuple(tuple(int(tau) for tau in row) for row in picks))

    def tau(self, i, j):
        return self.picks[i - 1][j - 1]
