from core.formats import load_graph
from core.paths import metric_of
from kcenter.epas import epas_doubling
from kcenter.models import SolveOutcome, Status
from kcenter.solvers import cost, decide_cover, farthest_first, solve_exact

from cli.base import LabCommand
from cli.serializers import SolveSerializer


class Command(LabCommand):
    help = "Solve k-Center on a graph file: exact, farthest-first (greedy) or the doubling EPAS."
    serializer_class = SolveSerializer

    def add_arguments(self, parser):
        parser.add_argument('graph')
        parser.add_argument('--algo', required=True, choices=SolveSerializer.ALGORITHMS)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--epsilon', help="EPAS accuracy as p/q or a decimal.")
        parser.add_argument('--radius', help="Decide coverability at this radius instead of optimising.")

    def run(self, graph, algo, k, epsilon=None, radius=None):
        metric = metric_of(load_graph(self.read(graph)))

        if algo == 'exact' and radius is not None:
            centers = decide_cover(metric, k, radius)
            if centers is None:
                outcome = SolveOutcome.unsat(radius)
            else:
                outcome = SolveOutcome(Status.SAT, centers=centers, cost=cost(metric, centers))
        elif algo == 'exact':
            outcome = solve_exact(metric, k)
        elif algo == 'greedy':
            centers = farthest_first(metric, k)
            outcome = SolveOutcome(Status.SAT, centers=centers, cost=cost(metric, centers))
        else:
            outcome = epas_doubling(metric, k, epsilon)

        self.emit(outcome.line())
