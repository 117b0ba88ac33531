# shenlarsson/serializers.py
from rest_framework import serializers

from .exceptions import HamLieError
from .linalg import SparseMatrix, Subspace, as_scalar, format_scalar
from .reps import Representation
from .symplectic import build_sp

COMMANDS = [
    'sp_check', 'rep_build', 'theta_check', 'dim_check', 'ham_bracket', 'g1_check', 'g2_table',
    'named_actions', 'shift_iso', 'submodule_check', 'claim2_witness', 'claim1_ineq', 'probe',
]

SUBMODULE_KINDS = [('trivial_line', 'trivial line'), ('delta1', 'delta1'), ('deltak', 'deltak')]


class RationalField(serializers.Field):
    """Exact rational written as "p/q" (or "p"); JSON integers are accepted on input."""

    default_error_messages = {
        'float': 'floats are not exact; write {value} as p/q.',
        'invalid': '"{value}" is not a rational literal.',
    }

    def to_representation(self, value):
        return format_scalar(value)

    def to_internal_value(self, data):
        if isinstance(data, float) or (isinstance(data, str) and ('.' in data or 'e' in data.lower())):
            self.fail('float', value=data)
        try:
            return as_scalar(data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid', value=data)


class RationalVectorField(serializers.Field):
    """A list of rationals, or a comma-separated literal "1/3,0,-2"."""

    default_error_messages = {
        'invalid': 'expected a list or a comma-separated string of rationals.',
    }

    def to_representation(self, value):
        return [format_scalar(v) for v in value]

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = [part.strip() for part in data.split(',') if part.strip()]
        if not isinstance(data, (list, tuple)):
            self.fail('invalid')
        child = RationalField()
        return tuple(child.to_internal_value(v) for v in data)


class MatrixSerializer(serializers.Serializer):
    rows = serializers.IntegerField(min_value=0)
    cols = serializers.IntegerField(min_value=0)
    entries = serializers.ListField(child=serializers.ListField(min_length=3, max_length=3))

    def to_representation(self, instance):
        return {
            'rows': instance.rows,
            'cols': instance.cols,
            'entries': [[i, j, format_scalar(v)] for (i, j), v in instance.entries().items()],
        }

    def validate(self, data):
        field = RationalField()
        entries = {}
        for position, (i, j, value) in enumerate(data['entries']):
            if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < data['rows'] and 0 <= j < data['cols']):
                raise serializers.ValidationError({'entries': f'entry {position} has an index outside the matrix'})
            entries[(i, j)] = field.to_internal_value(value)
        data['matrix'] = SparseMatrix.from_entries(data['rows'], data['cols'], entries)
        return data

    def create(self, validated_data):
        return validated_data['matrix']


class AlgebraSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)

    def to_representation(self, instance):
        return {
            'n': instance.n,
            'dim': instance.dim,
            'basis': [
                {
                    'label': e.label,
                    'kind': e.kind,
                    'root': list(e.root),
                    'matrix': MatrixSerializer(e.matrix).data,
                }
                for e in instance.elements
            ],
        }

    def create(self, validated_data):
        return build_sp(validated_data['n'])


class SubspaceSerializer(serializers.Serializer):
    ambient_dim = serializers.IntegerField(min_value=0)
    basis = serializers.ListField(child=RationalVectorField())

    def to_representation(self, instance):
        return {
            'ambient_dim': instance.ambient_dim,
            'basis': [[format_scalar(v) for v in row] for row in instance.basis],
        }

    def validate(self, data):
        if any(len(row) != data['ambient_dim'] for row in data['basis']):
            raise serializers.ValidationError({'basis': 'every row must have ambient_dim entries'})
        return data

    def create(self, validated_data):
        return Subspace.span(validated_data['ambient_dim'], validated_data['basis'])


class RepresentationSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    name = serializers.CharField(allow_blank=True)
    dim = serializers.IntegerField(min_value=0)
    labels = serializers.ListField(child=serializers.CharField())
    weights = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    action = serializers.DictField(child=MatrixSerializer())
    embedding = SubspaceSerializer(required=False, allow_null=True)

    def to_representation(self, instance):
        data = {
            'n': instance.alg.n,
            'name': instance.name,
            'dim': instance.dim,
            'labels': list(instance.basis_labels),
            'weights': [list(w) for w in instance.weights],
            'action': {label: MatrixSerializer(instance.rho(label)).data for label in instance.alg.labels},
        }
        if instance.embedding is not None:
            data['embedding'] = SubspaceSerializer(instance.embedding).data
        return data

    def validate(self, data):
        n, dim = data['n'], data['dim']
        alg = build_sp(n)
        missing = set(alg.labels) - set(data['action'])
        if missing:
            raise serializers.ValidationError({'action': f'missing matrices for {sorted(missing)}'})
        extra = set(data['action']) - set(alg.labels)
        if extra:
            raise serializers.ValidationError({'action': f'unknown basis labels {sorted(extra)}'})
        for label, matrix in data['action'].items():
            if (matrix['rows'], matrix['cols']) != (dim, dim):
                raise serializers.ValidationError({'action': f'{label} is not {dim}x{dim}'})
        if len(data['labels']) != dim:
            raise serializers.ValidationError({'labels': f'expected {dim} labels'})
        if len(data['weights']) != dim or any(len(w) != n for w in data['weights']):
            raise serializers.ValidationError({'weights': f'expected {dim} weights of length {n}'})
        embedding = data.get('embedding')
        if embedding is not None and len(embedding['basis']) != dim:
            raise serializers.ValidationError({'embedding': f'expected {dim} basis rows'})
        data['alg'] = alg
        return data

    def create(self, validated_data):
        alg = validated_data['alg']
        embedding = validated_data.get('embedding')
        if embedding is not None:
            embedding = Subspace.span(embedding['ambient_dim'], embedding['basis'])
        try:
            return Representation(
                alg,
                validated_data['dim'],
                tuple(validated_data['labels']),
                {label: validated_data['action'][label]['matrix'] for label in alg.labels},
                tuple(tuple(w) for w in validated_data['weights']),
                name=validated_data['name'],
                embedding=embedding,
            )
        except HamLieError as exc:
            raise serializers.ValidationError({'action': str(exc)})


class TruncatedModuleSerializer(serializers.Serializer):
    alpha = RationalVectorField()
    beta = RationalVectorField()
    rep_ref = serializers.CharField()
    box_radius = serializers.IntegerField(min_value=0)
    spaces = serializers.DictField(child=serializers.ListField(child=RationalVectorField()))

    def to_representation(self, instance):
        data = instance.to_dict()
        return {
            'alpha': [format_scalar(v) for v in data['alpha']],
            'beta': [format_scalar(v) for v in data['beta']],
            'rep_ref': data['rep_ref'],
            'box_radius': data['box_radius'],
            'spaces': {g: [[format_scalar(v) for v in row] for row in rows] for g, rows in data['spaces'].items()},
        }


class ReportSerializer(serializers.Serializer):
    check = serializers.CharField()
    params = serializers.DictField()
    samples = serializers.IntegerField(min_value=0)
    passes = serializers.IntegerField(min_value=0)
    failure_count = serializers.IntegerField(min_value=0)
    failures = serializers.ListField(child=serializers.DictField())
    ok = serializers.BooleanField()
    verdict = serializers.CharField(required=False, allow_null=True)
    details = serializers.DictField(required=False)
    notes = serializers.ListField(child=serializers.CharField(), required=False)

    def to_representation(self, instance):
        return instance.to_dict()

    def validate(self, data):
        if data['passes'] + data['failure_count'] != data['samples']:
            raise serializers.ValidationError({'samples': 'passes and failures do not add up'})
        return data


class RunConfigSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=COMMANDS)
    n = serializers.IntegerField(min_value=1, default=1)
    rep = serializers.CharField(default='natural')
    alpha = RationalVectorField(required=False)
    beta = RationalVectorField(required=False)
    box = serializers.IntegerField(min_value=1, required=False)
    gens = serializers.IntegerField(min_value=1, required=False)
    samples = serializers.IntegerField(min_value=1, required=False)
    seed = serializers.IntegerField(required=False)
    output = serializers.CharField(required=False, allow_blank=True, default='')
    threads = serializers.IntegerField(min_value=1, required=False)
    kind = serializers.ChoiceField(choices=SUBMODULE_KINDS, required=False)
    k = serializers.IntegerField(min_value=0, required=False)
    n_max = serializers.IntegerField(min_value=1, required=False)
    gamma = RationalVectorField(required=False)
    input = serializers.CharField(required=False, allow_blank=True, default='')

    def validate(self, data):
        N = 2 * data['n']
        for name in ('alpha', 'beta', 'gamma'):
            value = data.get(name)
            if value is not None and len(value) != N:
                raise serializers.ValidationError({name: f'expected {N} entries, got {len(value)}'})
        gamma = data.get('gamma')
        if gamma is not None and any(g.denominator != 1 for g in gamma):
            raise serializers.ValidationError({'gamma': 'the shift must be a lattice vector'})
        if data['command'] == 'submodule_check' and not data.get('kind'):
            raise serializers.ValidationError({'kind': 'submodule_check needs --kind'})
        return data
