from core.formats import dump_graph
from core.rationals import format_rational
from gridtiling.formats import load_gt
from reduction.builder import build_reduction
from reduction.formats import dump_labels

from cli.base import LabCommand
from cli.serializers import ReduceSerializer


class Command(LabCommand):
    help = "Compile a GT instance into the k-Center graph G_I plus its label sidecar."
    serializer_class = ReduceSerializer

    def add_arguments(self, parser):
        parser.add_argument('gt_file')
        parser.add_argument('--graph-out', required=True, dest='graph_out')
        parser.add_argument('--labels-out', required=True, dest='labels_out')

    def run(self, gt_file, graph_out, labels_out):
        inst = build_reduction(load_gt(self.read(gt_file)))
        self.write(graph_out, dump_graph(inst.graph))
        self.write(labels_out, dump_labels(inst.labels))
        self.emit(
            f"REDUCED vertices={inst.graph.vertex_count} edges={inst.graph.edge_count} "
            f"k={inst.k} threshold={format_rational(inst.threshold)}"
        )
