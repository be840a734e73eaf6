# gridtiling/curated.py
#
# Hand-built kappa=2, n=2 instances with known verdicts. Sets are listed
# row-major: S_{1,1}, S_{1,2}, S_{2,1}, S_{2,2}.

from .models import GTInstance


def _grid(s11, s12, s21, s22):
    return GTInstance.from_lists(2, 2, [[s11, s12], [s21, s22]])


CURATED_SAT = [
    _grid([(1, 1)], [(1, 2)], [(2, 1)], [(2, 2)]),
    _grid([(1, 1)], [(1, 1)], [(1, 1)], [(1, 1)]),
    _grid([(2, 2)], [(2, 2)], [(2, 2)], [(2, 2)]),
    _grid([(2, 2), (1, 1)], [(1, 1), (1, 2)], [(1, 1)], [(2, 2)]),
    _grid([(1, 2)], [(1, 2)], [(2, 1)], [(2, 2)]),
    _grid([(2, 1), (1, 1)], [(1, 1)], [(1, 1)], [(1, 1)]),
    _grid([(1, 1)], [(2, 1)], [(1, 2)], [(2, 2)]),
    _grid([(1, 2), (1, 1)], [(2, 1), (1, 1)], [(2, 2)], [(2, 2)]),
    _grid([(1, 1), (2, 2)], [(2, 2)], [(2, 1), (2, 2)], [(2, 2)]),
    _grid([(2, 1)], [(2, 2)], [(2, 2)], [(2, 2)]),
]

CURATED_UNSAT = [
    # b = 2 > b' = 1 along row 1
    _grid([(1, 2)], [(1, 1)], [(2, 2)], [(2, 2)]),
    # a = 2 > a' = 1 down column 1
    _grid([(2, 1)], [(1, 1)], [(1, 1)], [(2, 2)]),
    _grid([(2, 2)], [(2, 1), (1, 1)], [(2, 2)], [(2, 2)]),
    _grid([(1, 1)], [(1, 1)], [(1, 2)], [(1, 1)]),
    _grid([(1, 1)], [(2, 1)], [(1, 1)], [(1, 1)]),
    _grid([(2, 1), (2, 2)], [(2, 2)], [(1, 1), (1, 2)], [(2, 2)]),
    _grid([(1, 2), (2, 2)], [(1, 1), (2, 1)], [(2, 2)], [(2, 2)]),
    # S_{2,2} needs a >= 2 from above and b >= 2 from the left
    _grid([(1, 1)], [(2, 2)], [(2, 2)], [(1, 2), (2, 1)]),
    _grid([(2, 2)], [(2, 2)], [(2, 1)], [(1, 2), (1, 1)]),
    _grid([(1, 2), (2, 1)], [(1, 1)], [(1, 1)], [(2, 2)]),
]
