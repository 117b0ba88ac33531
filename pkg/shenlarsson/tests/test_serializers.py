# shenlarsson/tests/test_serializers.py
from django.test import SimpleTestCase

from shenlarsson.hamiltonian import ModuleParams
from shenlarsson.linalg import as_scalar
from shenlarsson.reports import Report
from shenlarsson.reps import natural_rep
from shenlarsson.serializers import (
    AlgebraSerializer, MatrixSerializer, ReportSerializer, RepresentationSerializer, RunConfigSerializer,
    SubspaceSerializer, TruncatedModuleSerializer,
)
from shenlarsson.submodules import Box, full_family
from shenlarsson.symplectic import build_sp


class MatrixSerializerTests(SimpleTestCase):
    def test_valid_matrix(self):
        serializer = MatrixSerializer(data={'rows': 2, 'cols': 2, 'entries': [[0, 1, '1/2'], [1, 0, -3]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        matrix = serializer.save()
        self.assertEqual(matrix.get(0, 1), as_scalar('1/2'))
        self.assertEqual(matrix.get(1, 0), as_scalar(-3))
        self.assertEqual(MatrixSerializer(matrix).data['entries'], [[0, 1, '1/2'], [1, 0, '-3']])

    def test_index_outside_matrix(self):
        serializer = MatrixSerializer(data={'rows': 2, 'cols': 2, 'entries': [[2, 0, '1']]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('entries', serializer.errors)

    def test_float_entry_rejected(self):
        serializer = MatrixSerializer(data={'rows': 1, 'cols': 1, 'entries': [[0, 0, 0.5]]})
        self.assertFalse(serializer.is_valid())


class AlgebraSerializerTests(SimpleTestCase):
    def test_sp2(self):
        data = AlgebraSerializer(build_sp(1)).data
        self.assertEqual((data['n'], data['dim']), (1, 3))
        self.assertEqual(len(data['basis']), 3)
        self.assertIn('cartan', {b['kind'] for b in data['basis']})

    def test_create(self):
        serializer = AlgebraSerializer(data={'n': 2})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().dim, 10)


class SubspaceSerializerTests(SimpleTestCase):
    def test_span_is_reduced(self):
        serializer = SubspaceSerializer(data={'ambient_dim': 2, 'basis': [['1', '1'], ['2', '2']]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().dim, 1)

    def test_row_length(self):
        serializer = SubspaceSerializer(data={'ambient_dim': 3, 'basis': [['1', '1']]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('basis', serializer.errors)


class RepresentationSerializerTests(SimpleTestCase):
    def test_documented_keys(self):
        data = RepresentationSerializer(natural_rep(build_sp(1))).data
        self.assertTrue({'n', 'dim', 'labels', 'weights', 'action'} <= set(data))
        self.assertEqual(data['labels'], ['e1', 'e2'])

    def test_round_trip(self):
        data = dict(RepresentationSerializer(natural_rep(build_sp(1))).data)
        serializer = RepresentationSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save().basis_labels, tuple(data['labels']))

    def test_label_count(self):
        data = dict(RepresentationSerializer(natural_rep(build_sp(1))).data)
        data['labels'] = ['e1']
        serializer = RepresentationSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('labels', serializer.errors)


class TruncatedModuleSerializerTests(SimpleTestCase):
    def test_full_family_at_origin(self):
        p = ModuleParams((as_scalar('1/2'), 0), (0, 0), natural_rep(build_sp(1)))
        data = TruncatedModuleSerializer(full_family(p, Box(0, 2))).data
        self.assertEqual(data['alpha'], ['1/2', '0'])
        self.assertEqual(data['rep_ref'], 'natural')
        self.assertEqual(data['box_radius'], 0)
        self.assertEqual(data['spaces'], {'0,0': [['1', '0'], ['0', '1']]})


class ReportSerializerTests(SimpleTestCase):
    def test_counts_must_add_up(self):
        report = Report('demo')
        report.record(True)
        report.record(False, {'x': 1})
        data = dict(ReportSerializer(report).data)
        self.assertEqual(data['failure_count'], 1)
        self.assertTrue(ReportSerializer(data=data).is_valid())
        data['passes'] = 5
        serializer = ReportSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('samples', serializer.errors)


class RunConfigSerializerTests(SimpleTestCase):
    def test_vector_lengths(self):
        serializer = RunConfigSerializer(data={'command': 'probe', 'n': 1, 'alpha': '1/2,0,1'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('alpha', serializer.errors)

    def test_gamma_must_be_integral(self):
        serializer = RunConfigSerializer(data={'command': 'shift_iso', 'n': 1, 'gamma': '1/2,0'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('gamma', serializer.errors)

    def test_submodule_check_needs_kind(self):
        serializer = RunConfigSerializer(data={'command': 'submodule_check', 'n': 1})
        self.assertFalse(serializer.is_valid())
        self.assertIn('kind', serializer.errors)

    def test_accepts_rational_lists(self):
        serializer = RunConfigSerializer(data={'command': 'ham_bracket', 'n': 1, 'alpha': ['1/3', 2]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['alpha'], (as_scalar('1/3'), as_scalar(2)))
