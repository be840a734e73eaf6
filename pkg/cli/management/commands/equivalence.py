from django.core.management.base import CommandError

from gridtiling.formats import load_gt

from cli.base import PROPERTY_VIOLATION, LabCommand
from cli.checks import equivalence_verdicts, flag
from cli.serializers import EquivalenceSerializer


class Command(LabCommand):
    help = "Check that a GT instance and its k-Center reduction agree on satisfiability."
    serializer_class = EquivalenceSerializer

    def add_arguments(self, parser):
        parser.add_argument('gt_file')

    def run(self, gt_file):
        gt_sat, kcenter_sat = equivalence_verdicts(load_gt(self.read(gt_file)))
        if gt_sat == kcenter_sat:
            self.emit(f"EQUIV OK sat={flag(gt_sat)}")
            return
        self.emit(f"EQUIV MISMATCH gt={flag(gt_sat)} kcenter={flag(kcenter_sat)}")
        raise CommandError("GT and k-Center verdicts differ", returncode=PROPERTY_VIOLATION)
