# gridtiling/generator.py

import numpy as np

from .exceptions import InfeasibleParams
from .models import GTInstance


def gen_gt(kappa, n, set_size, planted, seed):
    """
    Seeded random GT instance. With `planted`, a monotone grid of pairs is
    drawn first (columns sorted in a, rows sorted in b) and one of its pairs is
    hidden in every set, so the instance is SAT.
    """
    if kappa < 1 or n < 2:
        raise InfeasibleParams(f"need kappa >= 1 and n >= 2, got kappa={kappa}, n={n}")
    if not 1 <= set_size <= n * n:
        raise InfeasibleParams(f"set_size must be in 1..{n * n}, got {set_size}")
    if seed < 0:
        raise InfeasibleParams(f"seed must be non-negative, got {seed}")

    rng = np.random.default_rng(seed)
    all_pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]

    if planted:
        a_grid = np.sort(rng.integers(1, n + 1, size=(kappa, kappa)), axis=0)
        b_grid = np.sort(rng.integers(1, n + 1, size=(kappa, kappa)), axis=1)

    sets = []
    for i in range(kappa):
        row = []
        for j in range(kappa):
            if planted:
                hidden = (int(a_grid[i, j]), int(b_grid[i, j]))
                others = [p for p in all_pairs if p != hidden]
                padding = rng.choice(len(others), size=set_size - 1, replace=False)
                cell = [hidden] + [others[int(k)] for k in padding]
                cell = [cell[int(k)] for k in rng.permutation(set_size)]
            else:
                drawn = rng.choice(len(all_pairs), size=set_size, replace=False)
                cell = [all_pairs[int(k)] for k in drawn]
            row.append(cell)
        sets.append(row)

    return GTInstance.from_lists(kappa, n, sets)
