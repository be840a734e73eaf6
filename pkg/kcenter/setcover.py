# kcenter/setcover.py
#
# Exact and greedy set cover over integer-keyed candidates. Shared by
# decide_cover (candidates are balls) and the structure audits.

import logging

logger = logging.getLogger(__name__)


def reduce_dominated(universe, candidates):
    """
    Drops candidates that cover nothing, or whose coverage is contained in
    another candidate's. Of two candidates with equal coverage the smaller key
    survives.
    """
    coverage = {key: frozenset(cover) & universe for key, cover in candidates.items()}
    keys = sorted(key for key, cover in coverage.items() if cover)
    kept = {}
    for key in keys:
        cover = coverage[key]
        dominated = any(
            cover < coverage[other] or (cover == coverage[other] and other < key)
            for other in keys if other != key
        )
        if not dominated:
            kept[key] = cover
    return kept


def greedy_cover(universe, candidates):
    """
    Classic greedy: repeatedly take the candidate covering the most uncovered
    elements (ties to the smaller key). Returns a sorted tuple, or None when
    some element has no candidate.
    """
    remaining = set(universe)
    coverage = {key: frozenset(cover) for key, cover in candidates.items()}
    chosen = []
    while remaining:
        best = max(sorted(coverage), key=lambda key: len(coverage[key] & remaining), default=None)
        if best is None or not coverage[best] & remaining:
            return None
        chosen.append(best)
        remaining -= coverage[best]
    return tuple(sorted(chosen))


def cover_within_budget(universe, candidates, budget):
    """
    Branch-and-bound search for at most `budget` candidates covering
    `universe`. Returns a sorted tuple of keys or None (certified infeasible).

    Each node first propagates forced picks (an element with a single available
    candidate), prunes with the anticover bound (uncovered elements whose
    candidate sets are pairwise disjoint each need their own pick), then
    branches on the uncovered element with the fewest available candidates,
    trying them in ascending key order and excluding earlier siblings.
    """
    universe = frozenset(universe)
    if not universe:
        return ()
    coverage = reduce_dominated(universe, candidates)
    covering = {element: [] for element in universe}
    for key in sorted(coverage):
        for element in coverage[key]:
            covering[element].append(key)
    if any(not keys for keys in covering.values()):
        return None

    stats = {'nodes': 0}

    def available(element, chosen, excluded):
        return [key for key in covering[element] if key not in excluded and key not in chosen]

    def search(chosen, covered, excluded):
        stats['nodes'] += 1
        chosen, covered = set(chosen), set(covered)

        changed = True
        while changed:
            changed = False
            for element in sorted(universe - covered):
                if element in covered:
                    continue
                options = available(element, chosen, excluded)
                if not options:
                    return None
                if len(options) == 1:
                    chosen.add(options[0])
                    covered |= coverage[options[0]]
                    changed = True
            if len(chosen) > budget:
                return None

        open_elements = sorted(universe - covered)
        if not open_elements:
            return tuple(sorted(chosen))

        blocked = set()
        anticover = 0
        options_of = {}
        for element in open_elements:
            options_of[element] = available(element, chosen, excluded)
            if blocked.isdisjoint(options_of[element]):
                anticover += 1
                blocked.update(options_of[element])
        if len(chosen) + anticover > budget:
            return None

        pivot = min(open_elements, key=lambda element: (len(options_of[element]), element))
        options = options_of[pivot]
        for index, key in enumerate(options):
            found = search(chosen | {key}, covered | coverage[key], excluded | set(options[:index]))
            if found is not None:
                return found
        return None

    result = search(set(), set(), frozenset())
    logger.debug(
        f"cover_within_budget: budget={budget} |U|={len(universe)} "
        f"candidates={len(coverage)} nodes={stats['nodes']} -> {'found' if result is not None else 'none'}"
    )
    return result


def minimum_cover(universe, candidates):
    """ Smallest cover, tightened downward from the greedy one. None if no cover exists. """
    best = greedy_cover(universe, candidates)
    if best is None:
        return None
    while best:
        tighter = cover_within_budget(universe, candidates, len(best) - 1)
        if tighter is None:
            return best
        best = tighter
    return best
