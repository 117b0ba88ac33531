# shenlarsson/tests/test_hamiltonian.py
import random

from django.test import SimpleTestCase
from sympy import QQ

from shenlarsson.exceptions import DimensionMismatch, GeneratorError
from shenlarsson.hamiltonian import (
    ModuleParams, act_A, act_d, act_H, check_d_eigenvalues, check_ham_bracket, coefficient_matrix, g1_polynomial,
    g2_polynomial, g2_table, graded, monomial, verify_g1_evaluation, verify_g1_expansion, verify_g2_evaluation,
    verify_g2_table, verify_ham_bracket, verify_jet_compatibility, verify_named_actions,
    verify_shift_isomorphism,
)
from shenlarsson.linalg import SparseMatrix, as_vector
from shenlarsson.reps import fundamental_rep, natural_rep, symmetric_power, trivial_rep
from shenlarsson.symplectic import build_sp


def natural_params(n, alpha, beta=None):
    return ModuleParams(alpha, beta or (0,) * (2 * n), natural_rep(build_sp(n)))


class ActionTests(SimpleTestCase):
    def setUp(self):
        self.p = natural_params(1, ('1/2', '1/2'))

    def test_delta1_generator(self):
        x = graded((0, 0), ('1/2', '1/2'))
        y = act_H((1, 0), x, self.p)
        self.assertEqual(y.grade, (1, 0))
        self.assertEqual(y.payload, as_vector(['-3/4', '-1/4']))

    def test_zero_generator(self):
        with self.assertRaises(GeneratorError):
            act_H((0, 0), graded((0, 0), (1, 0)), self.p)

    def test_derivations(self):
        p = natural_params(1, (0, 0), ('1/3', 2))
        x = graded((2, -1), (1, 1))
        self.assertEqual(act_d(1, x, p).payload, as_vector(['7/3', '7/3']))
        self.assertEqual(act_d(2, x, p).payload, as_vector([1, 1]))
        with self.assertRaises(GeneratorError):
            act_d(3, x, p)

    def test_jet_action(self):
        x = graded((1, 1), (1, 0))
        self.assertEqual(act_A((2, -1), x).grade, (3, 0))

    def test_coefficient_matrix_of_zero(self):
        self.assertTrue(coefficient_matrix((0, 0), (1, 2), self.p).is_zero())

    def test_parameter_lengths(self):
        with self.assertRaises(DimensionMismatch):
            natural_params(1, (0, 0, 0))


class BracketLawTests(SimpleTestCase):
    def test_opposite_generators_commute(self):
        p = natural_params(1, ('1/3', '2/5'))
        self.assertTrue(verify_ham_bracket((1, 2), (-1, -2), graded((0, 1), (1, 3)), p))
        self.assertIsNone(verify_ham_bracket((0, 0), (1, 0), graded((0, 0), (1, 0)), p))

    def test_natural(self):
        report = check_ham_bracket(natural_params(2, (0,) * 4), 40, random.Random(3))
        self.assertTrue(report.ok, report.failures)

    def test_fundamental_and_symmetric(self):
        alg = build_sp(2)
        for rep in (fundamental_rep(alg, 2), symmetric_power(natural_rep(alg), 2)):
            p = ModuleParams((0,) * 4, (0,) * 4, rep)
            report = check_ham_bracket(p, 20, random.Random(4))
            self.assertTrue(report.ok, (rep.name, report.failures))

    def test_derivations_and_jets(self):
        p = natural_params(2, ('1/2', 0, 0, '1/3'), (1, 0, 0, 0))
        self.assertTrue(check_d_eigenvalues(p, 20, random.Random(5)).ok)
        self.assertTrue(verify_jet_compatibility(p, 20, random.Random(6)).ok)


class PolynomialTests(SimpleTestCase):
    def test_g1_expansion(self):
        for n in (1, 2):
            p = natural_params(n, tuple('1/3' if i == 0 else 0 for i in range(2 * n)))
            report = verify_g1_expansion(p, tuple(range(1, 2 * n + 1)))
            self.assertTrue(report.ok, report.failures)
            self.assertEqual(report.details['degree'], 2)

    def test_g1_evaluation(self):
        p = natural_params(2, ('1/2', 0, '1/7', 0))
        self.assertTrue(verify_g1_evaluation(p, (1, 0, -1, 2), 20, random.Random(7)).ok)

    def test_g1_of_trivial_module_is_scalar(self):
        p = ModuleParams(('1/2', 0), (0, 0), trivial_rep(build_sp(1)))
        poly = g1_polynomial((0, 0), p)
        self.assertEqual(poly.coefficient(monomial(2, {2: 1})), SparseMatrix.identity(1).scale('1/2'))
        self.assertEqual(poly.evaluate((1, 1)), SparseMatrix.identity(1).scale('1/2'))

    def test_g2_degree(self):
        # rho(s s̄^t) squares to zero on the natural module, so the quartic part only shows up in Sym^2
        natural = natural_params(1, ('1/2', '1/3'))
        poly = g2_polynomial((1, 2), (0, 1), natural)
        self.assertLessEqual(poly.degree(), 3)
        self.assertTrue(poly.coefficient((4, 0)).is_zero())
        sym2 = ModuleParams(('1/2', '1/3'), (0, 0), symmetric_power(natural_rep(build_sp(1)), 2))
        self.assertEqual(g2_polynomial((1, 2), (0, 1), sym2).degree(), 4)

    def test_g2_table(self):
        alg = build_sp(2)
        for rep in (natural_rep(alg), fundamental_rep(alg, 2)):
            report = verify_g2_table(ModuleParams(('1/3', 0, 0, 0), (0,) * 4, rep))
            self.assertTrue(report.ok, (rep.name, report.failures))
            self.assertEqual(report.samples, 2 * 2 + 2 * 1 + 2 * 2)

    def test_g2_table_symmetric_square(self):
        for n, rows in ((2, 10), (3, 24)):
            rep = symmetric_power(natural_rep(build_sp(n)), 2)
            p = ModuleParams(('1/3',) + (0,) * (2 * n - 1), (0,) * (2 * n), rep)
            self.assertTrue(all(not expected.is_zero() for _, _, _, expected in g2_table(p)))
            report = verify_g2_table(p)
            self.assertTrue(report.ok, (n, report.failures))
            self.assertEqual(report.samples, rows)
            self.assertEqual(report.details['degree'], 4)

    def test_g2_table_rank_one(self):
        report = verify_g2_table(natural_params(1, (0, 0)))
        self.assertTrue(report.ok)
        self.assertIn('two-index rows are vacuous for n = 1', report.notes)

    def test_g2_evaluation(self):
        p = natural_params(1, ('1/2', '1/5'))
        self.assertTrue(verify_g2_evaluation(p, 5, random.Random(8)).ok)


class NamedActionTests(SimpleTestCase):
    def test_named_actions(self):
        p = natural_params(2, ('1/2', '-1/3', 0, 1))
        report = verify_named_actions(p, 10, random.Random(9))
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.samples, 10 * (2 + 2 + 2))

    def test_shift_isomorphism(self):
        alg = build_sp(2)
        p = ModuleParams(('1/3', 0, '1/2', 0), (0, 1, 0, 0), fundamental_rep(alg, 2))
        report = verify_shift_isomorphism((1, -2, 0, 3), p, 10, random.Random(10))
        self.assertTrue(report.ok, report.failures)

    def test_shift_moves_parameters(self):
        p = natural_params(1, ('1/2', 0))
        shifted = p.shifted((1, -1))
        self.assertEqual(shifted.alpha, (QQ(3, 2), QQ(-1)))
        self.assertEqual(shifted.beta, (QQ(1), QQ(-1)))
