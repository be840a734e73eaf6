# gridtiling/tests.py

import itertools

from django.test import SimpleTestCase

from core.exceptions import FormatError

from .curated import CURATED_SAT, CURATED_UNSAT
from .exceptions import IndexOutOfRange, InfeasibleParams, InvalidInstance
from .formats import dump_gt, load_gt
from .generator import gen_gt
from .models import GTAssignment, GTInstance
from .solver import check_gt_assignment, solve_gt, solve_gt_bruteforce


def two_by_two(s11, s12, s21, s22, n=2):
    return GTInstance.from_lists(2, n, [[s11, s12], [s21, s22]])


class GTInstanceTests(SimpleTestCase):

    def test_rejects_malformed_sets(self):
        with self.assertRaises(InvalidInstance):
            GTInstance.from_lists(1, 2, [[[]]])
        with self.assertRaises(InvalidInstance):
            GTInstance.from_lists(1, 2, [[[(1, 1), (1, 1)]]])
        with self.assertRaises(InvalidInstance):
            GTInstance.from_lists(1, 2, [[[(3, 1)]]])
        with self.assertRaises(InvalidInstance):
            GTInstance.from_lists(1, 1, [[[(1, 1)]]])

    def test_element_order_is_kept(self):
        instance = GTInstance.from_lists(1, 3, [[[(3, 1), (1, 2), (2, 2)]]])
        self.assertEqual(instance.pair(1, 1, 1), (3, 1))
        self.assertEqual(instance.pair(1, 1, 3), (2, 2))
        with self.assertRaises(IndexOutOfRange):
            instance.pair(1, 1, 4)


class CheckAssignmentTests(SimpleTestCase):

    def test_single_cell_never_violates(self):
        instance = GTInstance.from_lists(1, 3, [[[(3, 3), (1, 1)]]])
        self.assertTrue(check_gt_assignment(instance, GTAssignment.from_lists([[2]])))

    def test_monotone_grid_passes(self):
        instance = two_by_two([(1, 1)], [(1, 2)], [(2, 1)], [(2, 2)])
        self.assertTrue(check_gt_assignment(instance, GTAssignment.from_lists([[1, 1], [1, 1]])))

    def test_row_violation_fails(self):
        instance = two_by_two([(1, 2)], [(1, 1)], [(2, 2)], [(2, 2)])
        self.assertFalse(check_gt_assignment(instance, GTAssignment.from_lists([[1, 1], [1, 1]])))

    def test_bad_index(self):
        instance = two_by_two([(1, 1)], [(1, 2)], [(2, 1)], [(2, 2)])
        with self.assertRaises(IndexOutOfRange):
            check_gt_assignment(instance, GTAssignment.from_lists([[1, 2], [1, 1]]))
        with self.assertRaises(IndexOutOfRange):
            check_gt_assignment(instance, GTAssignment.from_lists([[1]]))


class SolveGTTests(SimpleTestCase):

    def test_single_cell(self):
        instance = GTInstance.from_lists(1, 2, [[[(1, 1)]]])
        self.assertEqual(solve_gt(instance), GTAssignment.from_lists([[1]]))

    def test_curated_unsat(self):
        self.assertIsNone(solve_gt(two_by_two([(1, 2)], [(1, 1)], [(2, 2)], [(2, 2)])))

    def test_curated_sat(self):
        instance = two_by_two([(1, 1)], [(1, 2)], [(2, 1)], [(2, 2)])
        self.assertEqual(solve_gt(instance), GTAssignment.from_lists([[1, 1], [1, 1]]))

    def test_search_skips_clashing_first_choices(self):
        instance = two_by_two([(2, 2), (1, 1)], [(1, 1), (1, 2)], [(1, 1)], [(2, 2)])
        assignment = solve_gt(instance)
        self.assertEqual(assignment, GTAssignment.from_lists([[2, 1], [1, 1]]))

    def test_curated_verdicts(self):
        for instance in CURATED_SAT:
            self.assertIsNotNone(solve_gt_bruteforce(instance))
            self.assertTrue(check_gt_assignment(instance, solve_gt(instance)))
        for instance in CURATED_UNSAT:
            self.assertIsNone(solve_gt_bruteforce(instance))
            self.assertIsNone(solve_gt(instance))

    def test_agrees_with_bruteforce_on_small_grids(self):
        pairs = [(a, b) for a in (1, 2) for b in (1, 2)]
        seeds = itertools.count()
        for kappa in (1, 2):
            for set_size in (1, 2, 3):
                for _ in range(25):
                    instance = gen_gt(kappa, 2, set_size, planted=False, seed=next(seeds))
                    self.assertEqual(solve_gt(instance) is None, solve_gt_bruteforce(instance) is None)
        # every 2x2 grid of singletons
        for combo in itertools.product(pairs, repeat=4):
            instance = two_by_two(*[[p] for p in combo])
            self.assertEqual(solve_gt(instance) is None, solve_gt_bruteforce(instance) is None)

    def test_kappa_one_is_always_sat(self):
        for seed in range(10):
            self.assertIsNotNone(solve_gt(gen_gt(1, 3, 2, planted=False, seed=seed)))


class GeneratorTests(SimpleTestCase):

    def test_planted_instances_are_sat(self):
        self.assertIsNotNone(solve_gt(gen_gt(2, 2, 1, planted=True, seed=7)))
        for seed in range(20):
            instance = gen_gt(3, 3, 2, planted=True, seed=seed)
            self.assertIsNotNone(solve_gt(instance))

    def test_deterministic_for_a_seed(self):
        self.assertEqual(gen_gt(3, 3, 2, planted=True, seed=42), gen_gt(3, 3, 2, planted=True, seed=42))

    def test_set_sizes(self):
        instance = gen_gt(2, 3, 4, planted=False, seed=3)
        self.assertTrue(all(len(instance.cell(i, j)) == 4 for i, j in instance.cells()))

    def test_infeasible_params(self):
        with self.assertRaises(InfeasibleParams):
            gen_gt(2, 2, 5, planted=True, seed=1)
        with self.assertRaises(InfeasibleParams):
            gen_gt(2, 2, 0, planted=False, seed=1)

    def test_negative_seed(self):
        with self.assertRaises(InfeasibleParams):
            gen_gt(2, 2, 1, planted=True, seed=-1)


class GTFormatTests(SimpleTestCase):

    def test_round_trip(self):
        instance = gen_gt(2, 3, 3, planted=True, seed=11)
        text = dump_gt(instance)
        self.assertEqual(load_gt(text), instance)
        self.assertEqual(dump_gt(load_gt(text)), text)

    def test_layout(self):
        instance = two_by_two([(1, 1), (2, 1)], [(1, 2)], [(2, 1)], [(2, 2)])
        self.assertEqual(
            dump_gt(instance),
            "gt 2 2\nset 1 1 : 1,1 2,1\nset 1 2 : 1,2\nset 2 1 : 2,1\nset 2 2 : 2,2\n",
        )

    def test_malformed(self):
        with self.assertRaises(FormatError):
            load_gt("gt 1 2\nset 1 1 : 1;1\n")
        with self.assertRaises(FormatError):
            load_gt("gt 2 2\nset 1 1 : 1,1\n")
        with self.assertRaises(FormatError):
            load_gt("gt 1 2\nset 1 1 : 3,1\n")
