from gridtiling.formats import dump_gt
from gridtiling.generator import gen_gt

from cli.base import LabCommand
from cli.serializers import GenGTSerializer


class Command(LabCommand):
    help = "Generate a seeded Grid Tiling with Inequality instance."
    serializer_class = GenGTSerializer

    def add_arguments(self, parser):
        parser.add_argument('--kappa', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--set-size', type=int, required=True, dest='set_size')
        parser.add_argument('--planted', action='store_true', help="Hide a monotone solution in the grid.")
        parser.add_argument('--seed', type=int, required=True)
        parser.add_argument('--output', help="Write here instead of stdout.")

    def run(self, kappa, n, set_size, planted, seed, output=None):
        text = dump_gt(gen_gt(kappa, n, set_size, planted, seed))
        if output:
            self.write(output, text)
        else:
            self.stdout.write(text, ending='')
