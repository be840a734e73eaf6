from core.formats import load_graph
from core.paths import metric_of
from reduction.formats import load_reduction

from cli.base import LabCommand
from cli.checks import (
    check_claims,
    check_doubling_samples,
    check_equivalence,
    check_hubs,
    check_pathdec,
)
from cli.serializers import VerifySerializer


class Command(LabCommand):
    help = "Run one structural audit on a reduction instance (graph file plus label sidecar)."
    serializer_class = VerifySerializer

    def add_arguments(self, parser):
        parser.add_argument('graph')
        parser.add_argument('labels')
        parser.add_argument('--check', required=True, choices=VerifySerializer.CHECKS)
        parser.add_argument('--r', help="Hub scale r as p/q.")
        parser.add_argument('--c', help="Hub ball constant c (at least 4).")

    def run(self, graph, labels, check, r=None, c=None):
        inst = load_reduction(load_graph(self.read(graph)), self.read(labels))

        if check == 'pathdec':
            results = [check_pathdec(inst)]
        elif check == 'hubs':
            results = [check_hubs(inst, r, c)]
        elif check == 'doubling':
            results = check_doubling_samples(inst, metric_of(inst.graph))
        elif check == 'claims':
            results = check_claims(inst, metric_of(inst.graph))
        else:
            results = [check_equivalence(inst.source, inst=inst)]

        self.finish(results)
