# shenlarsson/tests/test_submodules.py
import random

from django.test import SimpleTestCase, tag

from shenlarsson.exceptions import DegenerateGradeError, InvalidRankError, OutsideBoxError, RepresentationError
from shenlarsson.hamiltonian import ModuleParams, act_H, graded
from shenlarsson.linalg import Subspace, as_vector, vector_add
from shenlarsson.reports import FULL, PROPER
from shenlarsson.reps import contraction_theta, fundamental_rep, natural_rep, symmetric_power, trivial_rep
from shenlarsson.submodules import (
    Box, GeneratorSet, build_submodule, claim1_inequality, claim2_sweep, claim2_witness, claim_m_nonzero,
    closure, full_family, invariance_check, irreducibility_probe, probe_families, quotient_probe, wedge,
    zero_family,
)
from shenlarsson.symplectic import build_sp


def params(rep, alpha):
    return ModuleParams(alpha, (0,) * len(alpha), rep)


class BoxTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual(len(Box(2, 2).grades), 25)
        self.assertEqual(len(GeneratorSet(1, 2)), 8)
        self.assertNotIn((0, 0), GeneratorSet(1, 2).vectors)

    def test_inner_box(self):
        self.assertEqual(Box(3, 2).inner(GeneratorSet(2, 2)).radius, 1)
        with self.assertRaises(OutsideBoxError):
            Box(1, 2).inner(GeneratorSet(2, 2))


class ClosureTests(SimpleTestCase):
    def setUp(self):
        self.trivial = trivial_rep(build_sp(1))

    def test_no_seeds(self):
        p = params(self.trivial, ('1/2', 0))
        self.assertEqual(closure([], p, Box(2, 2), GeneratorSet(1, 2)).spaces, {})

    def test_seed_outside_box(self):
        p = params(self.trivial, ('1/2', 0))
        with self.assertRaises(OutsideBoxError):
            closure([graded((3, 0), (1,))], p, Box(2, 2), GeneratorSet(1, 2))

    def test_trivial_line_is_closed(self):
        p = params(self.trivial, (1, 0))
        family = closure([graded((-1, 0), (1,))], p, Box(3, 2), GeneratorSet(2, 2))
        self.assertEqual(list(family.spaces), [(-1, 0)])

    def test_generic_trivial_module_fills_the_inner_box(self):
        p = params(self.trivial, ('1/2', 0))
        box, gens = Box(3, 2), GeneratorSet(2, 2)
        family = closure([graded((0, 0), (1,))], p, box, gens)
        self.assertTrue(family.is_full_on(box.inner(gens).grades))

    def test_order_independence(self):
        p = params(natural_rep(build_sp(1)), ('1/3', '1/5'))
        box, gens = Box(2, 2), GeneratorSet(1, 2)
        seeds = [graded((0, 0), ('1/3', '1/5')), graded((1, 0), ('4/3', '1/5'))]
        forward = closure(seeds, p, box, gens)
        backward = closure(list(reversed(seeds)), p, box, gens)
        self.assertEqual(forward.spaces, backward.spaces)

    def test_monotone_in_generators(self):
        p = params(natural_rep(build_sp(1)), ('1/3', '1/5'))
        box = Box(2, 2)
        seed = [graded((0, 0), (1, 0))]
        small = closure(seed, p, box, GeneratorSet(1, 2))
        large = closure(seed, p, box, GeneratorSet(2, 2))
        self.assertTrue(large.contains_family(small, box.grades))


class ExplicitSubmoduleTests(SimpleTestCase):
    def test_zero_and_full_families(self):
        p = params(natural_rep(build_sp(1)), ('1/2', 0))
        box, gens = Box(2, 2), GeneratorSet(1, 2)
        self.assertTrue(invariance_check(zero_family(p, box), gens).ok)
        self.assertTrue(invariance_check(full_family(p, box), gens).ok)

    def test_trivial_line(self):
        p = params(trivial_rep(build_sp(1)), (1, 0))
        family = build_submodule('trivial_line', p, Box(3, 2))
        self.assertEqual(list(family.spaces), [(-1, 0)])
        self.assertTrue(invariance_check(family, GeneratorSet(2, 2)).ok)
        for r in GeneratorSet(2, 2).vectors:
            self.assertFalse(any(act_H(r, graded((-1, 0), (1,)), p).payload))

    def test_trivial_line_needs_integral_alpha(self):
        p = params(trivial_rep(build_sp(1)), ('1/2', 0))
        with self.assertRaises(RepresentationError):
            build_submodule('trivial_line', p, Box(2, 2))

    def test_delta1(self):
        p = params(natural_rep(build_sp(1)), ('1/2', '1/2'))
        box, gens = Box(2, 2), GeneratorSet(1, 2)
        family = build_submodule('delta1', p, box)
        self.assertEqual(family.space((0, 0)), Subspace.span(2, [as_vector(['1/2', '1/2'])]))
        self.assertTrue(invariance_check(family, gens).ok)

    def test_delta1_closed_form(self):
        p = params(natural_rep(build_sp(1)), ('1/2', '1/2'))
        x = graded((0, 0), ('1/2', '1/2'))
        y = act_H((1, 0), x, p)
        target = vector_add((1, 0), p.alpha)
        self.assertEqual(y.payload, tuple(-c / 2 for c in target))

    def test_delta1_integral_alpha(self):
        p = params(natural_rep(build_sp(1)), (1, 0))
        box = Box(2, 2)
        family = build_submodule('delta1', p, box)
        self.assertEqual(family.dim((-1, 0)), 0)
        self.assertEqual(family.dim((0, 0)), 1)
        self.assertTrue(invariance_check(family, GeneratorSet(1, 2)).ok)

    def test_deltak(self):
        p = params(fundamental_rep(build_sp(2), 2), ('1/3', 0, 0, 0))
        box, gens = Box(1, 4), GeneratorSet(1, 4)
        family = build_submodule('deltak', p, box)
        for grade in box.grades:
            self.assertTrue(1 <= family.dim(grade) <= 4, grade)
        self.assertTrue(invariance_check(family, gens).ok)

    def test_deltak_integral_alpha(self):
        p = params(fundamental_rep(build_sp(2), 2), (1, 0, 0, 0))
        box = Box(1, 4)
        family = build_submodule('deltak', p, box)
        self.assertTrue(family.space((-1, 0, 0, 0)).is_full())
        self.assertTrue(invariance_check(family, GeneratorSet(1, 4)).ok)

    def test_deltak_wider_generators(self):
        p = params(fundamental_rep(build_sp(2), 2), ('1/3', 0, 0, 0))
        family = build_submodule('deltak', p, Box(2, 4))
        self.assertTrue(invariance_check(family, GeneratorSet(1, 4)).ok)

    @tag('slow')
    def test_deltak_large_box(self):
        p = params(fundamental_rep(build_sp(2), 2), ('1/3', 0, 0, 0))
        family = build_submodule('deltak', p, Box(3, 4))
        self.assertTrue(invariance_check(family, GeneratorSet(2, 4)).ok)

    @tag('slow')
    def test_deltak_rank_three(self):
        alg = build_sp(3)
        for k, alpha in ((2, ('1/3', 0, 0, 0, '1/2', 0)), (3, (1, 0, 0, 0, 0, 0))):
            family = build_submodule('deltak', params(fundamental_rep(alg, k), alpha), Box(1, 6))
            self.assertTrue(invariance_check(family, GeneratorSet(1, 6)).ok, k)

    def test_kind_mismatch(self):
        alg = build_sp(1)
        with self.assertRaises(RepresentationError):
            build_submodule('delta1', params(trivial_rep(alg), (0, 0)), Box(1, 2))
        with self.assertRaises(RepresentationError):
            build_submodule('deltak', params(natural_rep(alg), (0, 0)), Box(1, 2))
        with self.assertRaises(RepresentationError):
            build_submodule('delta2', params(natural_rep(alg), (0, 0)), Box(1, 2))


class WitnessTests(SimpleTestCase):
    def setUp(self):
        self.p = params(natural_rep(build_sp(2)), (0, 0, 0, 0))

    def test_first_basis_vector(self):
        w = claim2_witness(self.p, (1, 0, 0, 0), 2)
        self.assertEqual(w, as_vector([1, 0, 0, 0, 0, 0]))
        theta = contraction_theta(build_sp(2), 2)
        self.assertFalse(any(theta.matrix.apply(w)))

    def test_wedge_coordinates(self):
        self.assertEqual(wedge([(1, 2, 0), (0, 1, 3)]), as_vector([1, 3, 6]))
        self.assertEqual(wedge([(0, 1, 3), (1, 2, 0)]), as_vector([-1, -3, -6]))
        self.assertEqual(wedge([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), as_vector([1]))

    def test_rank_one(self):
        self.assertEqual(claim2_witness(self.p, (1, 2, 0, -1), 1), as_vector([1, 2, 0, -1]))

    def test_degenerate_grade(self):
        p = params(natural_rep(build_sp(2)), (-1, 0, 0, 0))
        with self.assertRaises(DegenerateGradeError):
            claim2_witness(p, (1, 0, 0, 0), 2)
        with self.assertRaises(InvalidRankError):
            claim2_witness(self.p, (1, 0, 0, 0), 3)

    def test_sweep(self):
        report = claim2_sweep(40, 3, random.Random(11))
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.samples, 40)

    def test_claim1(self):
        self.assertTrue(claim1_inequality(5).ok)
        report = claim1_inequality(10)
        self.assertFalse(report.ok)
        self.assertEqual(report.samples, 45)
        self.assertEqual(report.details['counterexamples'], [
            [6, 6, 429, 462], [7, 7, 1430, 1716], [8, 8, 4862, 6435], [9, 9, 16796, 24310], [10, 10, 58786, 92378],
        ])
        self.assertEqual(report.failure_count, 5)
        self.assertIn('(n, k) = (6, 6): 429 <= 462', report.notes[0])
        with self.assertRaises(InvalidRankError):
            claim1_inequality(1)


class IrreducibilitySearchTests(SimpleTestCase):
    def test_integral_trivial_module_is_reducible(self):
        p = params(trivial_rep(build_sp(1)), (1, 1))
        report = irreducibility_probe(p, Box(3, 2), GeneratorSet(2, 2), random.Random(0), random_seeds=1)
        self.assertEqual(report.verdict, PROPER)
        self.assertTrue(report.ok)

    def test_generic_trivial_module_fills(self):
        p = params(trivial_rep(build_sp(1)), ('1/2', 0))
        report = irreducibility_probe(p, Box(3, 2), GeneratorSet(2, 2), random.Random(0), random_seeds=1)
        self.assertEqual(report.verdict, FULL)
        self.assertTrue(report.notes)

    def test_natural_module_finds_delta1(self):
        p = params(natural_rep(build_sp(1)), ('1/3', '1/5'))
        box, gens = Box(2, 2), GeneratorSet(1, 2)
        families = probe_families(p, box, gens, random.Random(0), random_seeds=1)
        report = irreducibility_probe(p, box, gens, random.Random(0), families=families)
        self.assertEqual(report.verdict, PROPER)
        inner = box.inner(gens).grades
        delta1 = build_submodule('delta1', p, box)
        anchored = next(family for name, _, family in families if name.startswith('wedge'))
        self.assertTrue(delta1.contains_family(anchored, box.grades))
        self.assertTrue(anchored.same_on(delta1, inner))

    def test_quotient_by_trivial_line(self):
        p = params(trivial_rep(build_sp(1)), (1, 0))
        report = quotient_probe(p, Box(3, 2), GeneratorSet(2, 2), random.Random(2))
        self.assertEqual(report.verdict, FULL)

    def test_intersection_of_graded_pieces(self):
        p = params(trivial_rep(build_sp(1)), ('1/2', 0))
        report = claim_m_nonzero(p, graded((0, 0), (1,)), Box(3, 2), GeneratorSet(2, 2))
        self.assertTrue(report.ok)
        self.assertEqual(report.details['dim_M'], 1)
        self.assertFalse(report.details['proper'])

    def test_integral_trivial_module_rank_two(self):
        p = params(trivial_rep(build_sp(2)), (1, 0, 0, 0))
        report = irreducibility_probe(p, Box(2, 4), GeneratorSet(1, 4), random.Random(0), random_seeds=0)
        self.assertEqual(report.verdict, PROPER)
        line = report.details['seeds']['e1@-alpha']
        self.assertEqual((line['max_dim'], line['non_full_grades']), (1, 80))

    def test_second_fundamental_module_small_box(self):
        p = params(fundamental_rep(build_sp(2), 2), ('1/3', 0, 0, 0))
        box = Box(2, 4)
        families = probe_families(p, box, GeneratorSet(1, 4), random.Random(0), random_seeds=0)
        report = irreducibility_probe(p, box, GeneratorSet(1, 4), random.Random(0), families=families)
        self.assertEqual(report.verdict, PROPER)
        deltak = build_submodule('deltak', p, box)
        for name, _, family in families:
            if name.startswith('wedge'):
                self.assertTrue(deltak.contains_family(family, box.grades), name)


@tag('slow')
class RankTwoIrreducibilityTests(SimpleTestCase):
    """Irreducibility searches over sp_4 on the radius 3 box with radius 2 generators."""

    box = Box(3, 4)
    gens = GeneratorSet(2, 4)

    def search(self, p):
        families = probe_families(p, self.box, self.gens, random.Random(0), random_seeds=0)
        report = irreducibility_probe(p, self.box, self.gens, random.Random(0), families=families)
        return report, families

    def test_integral_trivial_module(self):
        report, _ = self.search(params(trivial_rep(build_sp(2)), (1, 0, 0, 0)))
        self.assertEqual(report.verdict, PROPER)

    def test_second_fundamental_module(self):
        p = params(fundamental_rep(build_sp(2), 2), ('1/3', 0, 0, 0))
        report, families = self.search(p)
        self.assertEqual(report.verdict, PROPER)
        self.assertTrue(report.ok, report.failures)
        inner = self.box.inner(self.gens).grades
        deltak = build_submodule('deltak', p, self.box)
        matching = [name for name, _, family in families if family.same_on(deltak, inner)]
        self.assertIn('e1@0', matching)
        self.assertIn('e3@0', matching)

    def test_symmetric_square_fills(self):
        p = params(symmetric_power(natural_rep(build_sp(2)), 2), ('1/3', 0, 0, 0))
        report, _ = self.search(p)
        self.assertEqual(report.verdict, FULL)
