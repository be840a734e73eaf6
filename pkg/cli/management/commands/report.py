from fractions import Fraction

import numpy as np

from core.paths import metric_of
from core.rationals import format_rational
from gridtiling.curated import CURATED_SAT, CURATED_UNSAT
from gridtiling.generator import gen_gt
from gridtiling.models import GTAssignment
from kcenter.epas import epas_doubling
from kcenter.generators import random_graph_metric, random_planar_metric
from kcenter.nets import check_net, net_ball_profile
from kcenter.solvers import cost, decide_cover, farthest_first, solve_bruteforce, solve_exact
from reduction.builder import build_reduction
from reduction.translate import gap_witnesses

from cli.base import LabCommand
from cli.checks import CheckResult, check_claims, check_equivalence, check_forward, check_pathdec
from cli.serializers import ReportSerializer

EPSILONS = (Fraction(1, 10), Fraction(1, 2), Fraction(1))


class Command(LabCommand):
    help = "Reproducible run of the acceptance battery at reduced size."
    serializer_class = ReportSerializer

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, required=True)
        parser.add_argument('--instances', type=int, help="Random instances per battery (default 4).")

    def run(self, seed, instances):
        rng = np.random.default_rng(seed)
        seeds = [int(s) for s in rng.integers(0, 2 ** 31, size=4 * instances)]
        results = []

        generated = [
            gen_gt(2, 2, set_size=1 + index % 2, planted=index % 2 == 0, seed=seeds[index])
            for index in range(instances)
        ]
        reductions = [(gt, build_reduction(gt)) for gt in generated]
        metrics = [metric_of(inst.graph) for _, inst in reductions]

        mismatches = [
            name for name, gt in self._equivalence_suite(generated)
            if not check_equivalence(gt, name, *self._cached(gt, reductions, metrics)).passed
        ]
        total = len(generated) + len(CURATED_SAT) + len(CURATED_UNSAT)
        results.append(CheckResult('equivalence', not mismatches, f"instances={total} mismatches={len(mismatches)}"))

        forward = [check_forward(inst, metric) for (_, inst), metric in zip(reductions, metrics)]
        results.append(CheckResult(
            'forward', all(r.passed for r in forward), f"instances={len(forward)} failures={sum(not r.passed for r in forward)}"
        ))

        results.append(self._gap())

        results.append(self._oracle(seeds[instances:2 * instances]))
        results.extend(self._approximations(seeds[2 * instances:3 * instances]))

        claims_failures = 0
        for (_, inst), metric in zip(reductions, metrics):
            claims_failures += sum(not r.passed for r in check_claims(inst, metric))
        results.append(CheckResult('claims', not claims_failures, f"instances={len(reductions)} failures={claims_failures}"))

        for kappa in (1, 2, 3):
            gt = gen_gt(kappa, 2, set_size=2, planted=True, seed=seeds[3 * instances])
            results.append(check_pathdec(build_reduction(gt), name=f"pathdec-k{kappa}"))

        self.finish(results)

    def _equivalence_suite(self, generated):
        suite = [(f"generated-{index}", gt) for index, gt in enumerate(generated)]
        suite += [(f"curated-sat-{index}", gt) for index, gt in enumerate(CURATED_SAT)]
        suite += [(f"curated-unsat-{index}", gt) for index, gt in enumerate(CURATED_UNSAT)]
        return suite

    def _cached(self, gt, reductions, metrics):
        for (source, inst), metric in zip(reductions, metrics):
            if source is gt:
                return inst, metric
        return None, None

    def _gap(self):
        """ Every curated UNSAT grid, picked all-first, leaves a witnessed hole at radius 2n^2. """
        failures = 0
        for gt in CURATED_UNSAT:
            inst = build_reduction(gt)
            picks = GTAssignment.from_lists([[1] * gt.kappa for _ in range(gt.kappa)])
            witnesses = gap_witnesses(inst, metric_of(inst.graph), picks)
            floor = 4 * gt.n ** 2 + Fraction(1, gt.n + 1)
            if not witnesses or not all(w.uncovered and w.distance >= floor for w in witnesses):
                failures += 1
        return CheckResult('gap', not failures, f"instances={len(CURATED_UNSAT)} failures={failures}")

    def _oracle(self, seeds):
        """ decide_cover and solve_exact against subset enumeration on small random metrics. """
        mismatches = 0
        for index, seed in enumerate(seeds):
            metric = random_graph_metric(4 + index % 6, seed)
            for k in range(1, 5):
                optimum = solve_bruteforce(metric, k).cost
                if solve_exact(metric, k).cost != optimum:
                    mismatches += 1
                below = [r for r in metric.candidate_radii() if r < optimum]
                if decide_cover(metric, k, optimum) is None or (below and decide_cover(metric, k, below[-1]) is not None):
                    mismatches += 1
        return CheckResult('oracle', not mismatches, f"metrics={len(seeds)} mismatches={mismatches}")

    def _approximations(self, seeds):
        """ EPAS within 1+epsilon, farthest-first within 2, and the net laws. """
        epas_violations = ff_violations = net_violations = nets_checked = 0
        worst = Fraction(0)
        ball_points, aspect = 0, Fraction(1)
        for index, seed in enumerate(seeds):
            metric = random_planar_metric(5 + index % 6, seed)
            for k in range(1, 4):
                optimum = solve_exact(metric, k).cost
                if cost(metric, farthest_first(metric, k)) > 2 * optimum:
                    ff_violations += 1
                for epsilon in EPSILONS:
                    nets = []
                    outcome = epas_doubling(metric, k, epsilon, nets=nets)
                    if outcome.cost > (1 + epsilon) * optimum:
                        epas_violations += 1
                    if optimum:
                        worst = max(worst, outcome.cost / optimum)
                    nets_checked += len(nets)
                    net_violations += sum(bool(check_net(metric, net)) for net in nets)
                    if nets:
                        accepted = nets[-1]
                        for ball in net_ball_profile(metric, accepted, outcome.centers, 2 * accepted.delta / epsilon):
                            ball_points = max(ball_points, ball.net_points)
                            aspect = max(aspect, ball.aspect_ratio)
        return [
            CheckResult('epas', not epas_violations, (
                f"metrics={len(seeds)} violations={epas_violations} worst_ratio={format_rational(worst)} "
                f"ball_net_points={ball_points} ball_aspect={format_rational(aspect)}"
            )),
            CheckResult('farthest-first', not ff_violations, f"metrics={len(seeds)} violations={ff_violations}"),
            CheckResult('nets', not net_violations, f"nets={nets_checked} violations={net_violations}"),
        ]
