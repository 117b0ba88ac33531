# shenlarsson/runner.py

"""
Execution of one verification run: RunConfig validation, representation
lookup through the cache, dispatch to the library checks and report output.
"""
import json
import logging
import os
import random
from dataclasses import dataclass, fields

from django.core.cache import cache

from .conf import hamlie_setting
from .exceptions import ConfigError, RepresentationError
from .hamiltonian import (
    ModuleParams, apply_H, check_d_eigenvalues, check_ham_bracket, verify_g1_evaluation, verify_g1_expansion,
    verify_g2_evaluation, verify_g2_table, verify_jet_compatibility, verify_named_actions,
    verify_shift_isomorphism,
)
from .linalg import ZERO
from .reports import Report
from .reps import (
    check_brackets, check_cartan_diagonal, check_nilpotent, check_theta, dimension_formula, exterior_power,
    fundamental_rep, highest_weight_module, highest_weight_vectors, is_irreducible, natural_rep, symmetric_power,
    trivial_rep, weight_multiset_symmetric,
)
from .serializers import (
    AlgebraSerializer, ReportSerializer, RepresentationSerializer, RunConfigSerializer, TruncatedModuleSerializer,
)
from .submodules import (
    Box, GeneratorSet, build_submodule, claim1_inequality, claim2_sweep, claim_m_nonzero, invariance_check,
    irreducibility_probe, is_trivial_rep, probe_families, quotient_probe,
)
from .symplectic import build_sp, check_antisymmetry, check_heights, check_structure, fundamental_weight
from .utils import is_integral, random_lattice_vector, worker_limit

logger = logging.getLogger(__name__)

CHECKS = {
    'sp_check': 'basis brackets close, basis matrices are symplectic, r r̄^t lies in sp_N, '
                '(r̄, s) = -(s̄, r), root heights match their closed forms',
    'rep_build': 'a representation is a Lie homomorphism with diagonal Cartan action, '
                 'symmetric weights and nilpotent root vectors; its file round-trips exactly',
    'theta_check': 'theta_k is sp_N-equivariant with dim Ker theta_k = C(2n,k) - C(2n,k-2)',
    'dim_check': 'V(delta_k) = Ker theta_k is irreducible of dimension C(2n,k) - C(2n,k-2)',
    'ham_bracket': '[H_r, H_s] = (r̄, s) H_{r+s} on F^{alpha,beta}(V); d_i acts by s_i + beta_i; '
                   'the A_N-action is compatible',
    'g1_check': 'g1(s) matches its basis expansion and the action of H_s',
    'g2_table': 'degree-4 coefficients of g2(s) match the six-row table',
    'named_actions': 'H_{e_i}, H_{e_{n+i}} and H_{e_i+e_{n+j}} act by the listed formulas',
    'shift_iso': 'F^{alpha,beta}(V) ≅ F^{alpha+gamma,beta+gamma}(V) via v⊗t^r -> v⊗t^{r-gamma}',
    'submodule_check': 'the trivial line, the delta1 family and the W_r^k ∩ Ker theta_k family are invariant',
    'claim2_witness': 'W_r^k ∩ Ker theta_k contains an explicit nonzero wedge',
    'claim1_ineq': 'dim V(delta_k) > C(2n-1, k-1) for 2 <= k <= n',
    'probe': 'closures of seed vectors fill the inner box (FULL) or stop at a proper invariant family (PROPER)',
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = 1
    rep: str = 'natural'
    alpha: tuple = None
    beta: tuple = None
    box: int = None
    gens: int = None
    samples: int = None
    seed: int = None
    output: str = ''
    threads: int = None
    kind: str = None
    k: int = None
    n_max: int = None
    gamma: tuple = None
    input: str = ''

    @classmethod
    def from_options(cls, command, **options):
        names = {f.name for f in fields(cls)}
        data = {k: v for k, v in options.items() if k in names and v is not None}
        serializer = RunConfigSerializer(data={**data, 'command': command})
        if not serializer.is_valid():
            logger.error('invalid run configuration: %s', serializer.errors)
            raise ConfigError({k: ' '.join(map(str, v)) for k, v in serializer.errors.items()})
        config = cls(**serializer.validated_data)
        N = 2 * config.n
        return cls(**{
            **serializer.validated_data,
            'alpha': config.alpha if config.alpha is not None else (ZERO,) * N,
            'beta': config.beta if config.beta is not None else (ZERO,) * N,
            'box': config.box or hamlie_setting('BOX_RADIUS'),
            'gens': config.gens or hamlie_setting('GEN_RADIUS'),
            'samples': config.samples or hamlie_setting('SAMPLES'),
            'seed': config.seed if config.seed is not None else hamlie_setting('RNG_SEED'),
            'threads': config.threads or hamlie_setting('THREADS'),
        })

    @property
    def output_path(self):
        if self.output:
            return self.output
        directory = hamlie_setting('REPORT_DIR')
        if directory:
            return os.path.join(directory, f'{self.command}.json')
        return ''


def dump_representation(rep):
    return json.dumps(RepresentationSerializer(rep).data, sort_keys=True, indent=2) + '\n'


def load_representation(text, source='<string>'):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError({'file': f'{source} is not valid JSON: {exc}'})
    serializer = RepresentationSerializer(data=data)
    if not serializer.is_valid():
        raise ConfigError({f'{source}:{k}': ' '.join(map(str, v)) for k, v in serializer.errors.items()})
    return serializer.save()


def serialize_rep(rep, path):
    with open(path, 'w') as handle:
        handle.write(dump_representation(rep))
    logger.info('wrote %r to %s', rep, path)


def deserialize_rep(path):
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError({'file': f'cannot read {path}: {exc}'})
    return load_representation(text, source=path)


def _build_rep(alg, rep_name):
    kind, _, arg = rep_name.partition(':')
    if kind == 'natural' and not arg:
        return natural_rep(alg)
    if kind == 'trivial' and not arg:
        return trivial_rep(alg)
    try:
        k = int(arg)
    except ValueError:
        raise RepresentationError(f'cannot read representation name {rep_name!r}')
    if kind == 'fundamental':
        return fundamental_rep(alg, k)
    if kind == 'sym':
        return symmetric_power(natural_rep(alg), k)
    if kind == 'exterior':
        return exterior_power(natural_rep(alg), k)
    raise RepresentationError(f'unknown representation kind {kind!r}')


def resolve_rep(n, rep_name):
    """natural | trivial | fundamental:k | sym:k | exterior:k | file:path, cached by (n, rep_name)."""
    if rep_name.startswith('file:'):
        rep = deserialize_rep(rep_name[len('file:'):])
        if rep.alg.n != n:
            raise RepresentationError(f'{rep_name} holds a module over sp_{2 * rep.alg.n}, not sp_{2 * n}')
        return rep

    cache_key = f'rep_{n}_{rep_name}'
    cached = cache.get(cache_key)
    if cached is not None:
        logger.debug('representation cache hit: %s', cache_key)
        return load_representation(cached, source=cache_key)
    rep = _build_rep(build_sp(n), rep_name)
    cache.set(cache_key, dump_representation(rep))
    return rep


def _params(config):
    return ModuleParams(config.alpha, config.beta, resolve_rep(config.n, config.rep))


def _grades(config, count, rng):
    return [random_lattice_vector(rng, 2 * config.n, 2) for _ in range(count)]


def run_sp_check(config, rng):
    alg = build_sp(config.n)
    report = Report('sp-check', params={'n': config.n, 'samples': config.samples})
    report.absorb(check_structure(alg, config.samples, rng))
    report.absorb(check_antisymmetry(config.n, config.samples, rng))
    report.absorb(check_heights(config.n))
    if config.output_path:
        report.details['algebra_file'] = write_companion(AlgebraSerializer(alg).data, config.output_path, 'algebra')
    return report


def run_rep_build(config, rng):
    rep = resolve_rep(config.n, f'file:{config.input}' if config.input else config.rep)
    report = Report('rep-build', params={'n': config.n, 'rep': rep.name, 'dim': rep.dim})
    for part in (check_brackets(rep), check_cartan_diagonal(rep), check_nilpotent(rep)):
        report.absorb(part)
    report.record(weight_multiset_symmetric(rep), {'kind': 'weight_symmetry'})
    text = dump_representation(rep)
    report.record(dump_representation(load_representation(text)) == text, {'kind': 'round_trip'})
    report.details['irreducible'] = is_irreducible(rep) if rep.dim else False
    return report, rep


def run_theta_check(config, rng):
    alg = build_sp(config.n)
    ks = [config.k] if config.k is not None else range(2, config.n + 1)
    report = Report('theta-check', params={'n': config.n, 'k': list(ks)})
    for k in ks:
        report.absorb(check_theta(alg, k), prefix=f'theta_{k}')
    return report


def run_dim_check(config, rng):
    alg = build_sp(config.n)
    report = Report('dim-check', params={'n': config.n})
    for k in range(config.n + 1):
        rep = fundamental_rep(alg, k)
        expected = dimension_formula(config.n, k)
        report.record(rep.dim == expected, {'k': k, 'dim': rep.dim, 'expected': expected})
        report.record(is_irreducible(rep), {'k': k, 'kind': 'irreducible'})
        if k >= 1:
            top = fundamental_weight(k, config.n)
            weights = [w for _, w in highest_weight_vectors(rep)]
            report.record(weights == [top], {'k': k, 'kind': 'highest_weight', 'weights': weights})
        if k >= 2:
            cyclic = highest_weight_module(exterior_power(natural_rep(alg), k), top)
            report.record(cyclic.dim == expected, {'k': k, 'kind': 'cyclic_span', 'dim': cyclic.dim})
        report.details[f'dim_V(delta_{k})'] = rep.dim
    return report


def run_ham_bracket(config, rng):
    p = _params(config)
    report = Report('ham-bracket', params={**p.describe(), 'samples': config.samples})
    report.absorb(check_ham_bracket(p, config.samples, rng))
    report.absorb(check_d_eigenvalues(p, config.samples, rng))
    report.absorb(verify_jet_compatibility(p, config.samples, rng))
    return report


def run_g1_check(config, rng):
    p = _params(config)
    report = Report('g1-check', params=p.describe())
    for r in _grades(config, 3, rng):
        report.absorb(verify_g1_expansion(p, r), prefix=f'expansion{list(r)}')
        report.absorb(verify_g1_evaluation(p, r, config.samples, rng), prefix=f'evaluation{list(r)}')
    return report


def run_g2_table(config, rng):
    p = _params(config)
    report = verify_g2_table(p)
    report.check = 'g2-table'
    report.absorb(verify_g2_evaluation(p, max(1, config.samples // 10), rng))
    return report


def run_named_actions(config, rng):
    return verify_named_actions(_params(config), config.samples, rng)


def run_shift_iso(config, rng):
    p = _params(config)
    gamma = config.gamma if config.gamma is not None else random_lattice_vector(rng, p.N, 3, nonzero=True)
    return verify_shift_isomorphism(gamma, p, config.samples, rng)


def run_submodule_check(config, rng):
    p = _params(config)
    box, gens = Box(config.box, p.N), GeneratorSet(config.gens, p.N)
    family = build_submodule(config.kind, p, box)
    report = invariance_check(family, gens)
    report.check = 'submodule-check'
    report.params['kind'] = config.kind
    dims = {}
    for grade in box.grades:
        dims[family.dim(grade)] = dims.get(family.dim(grade), 0) + 1
    report.details['dimension_histogram'] = {str(d): c for d, c in sorted(dims.items())}
    anchor = tuple(-int(a) for a in p.alpha) if is_integral(p.alpha) else None
    if config.kind == 'trivial_line' and anchor is not None and box.contains(anchor):
        for r in gens.vectors:
            report.record(not any(apply_H(r, anchor, (1,), p)), {'kind': 'annihilated', 'r': list(r)})
    if config.kind == 'deltak':
        for grade in box.grades:
            if grade == anchor:
                continue
            d = family.dim(grade)
            report.record(0 < d < p.rep.dim, {'kind': 'nonzero_proper', 'grade': list(grade), 'dim': d})
    if config.output_path:
        data = TruncatedModuleSerializer(family).data
        report.details['family_file'] = write_companion(data, config.output_path, 'family')
    return report


def run_claim2_witness(config, rng):
    return claim2_sweep(config.samples, config.n_max or max(config.n, 2), rng)


def run_claim1_ineq(config, rng):
    return claim1_inequality(config.n_max or 10)


def run_probe(config, rng):
    p = _params(config)
    box, gens = Box(config.box, p.N), GeneratorSet(config.gens, p.N)
    families = probe_families(p, box, gens, rng, threads=config.threads)
    report = irreducibility_probe(p, box, gens, rng, families=families)
    name, seed, family = families[0]
    m = claim_m_nonzero(p, seed, box, gens, family=family)
    report.details['claim_m'] = {'seed': name, 'dim_M': m.details['dim_M'], 'sp_stable': m.ok}
    if is_trivial_rep(p.rep) and is_integral(p.alpha):
        quotient = quotient_probe(p, box, gens, rng)
        report.details['quotient'] = {'verdict': quotient.verdict, 'summary': quotient.summary()}
    return report


RUNNERS = {
    'sp_check': run_sp_check,
    'theta_check': run_theta_check,
    'dim_check': run_dim_check,
    'ham_bracket': run_ham_bracket,
    'g1_check': run_g1_check,
    'g2_table': run_g2_table,
    'named_actions': run_named_actions,
    'shift_iso': run_shift_iso,
    'submodule_check': run_submodule_check,
    'claim2_witness': run_claim2_witness,
    'claim1_ineq': run_claim1_ineq,
    'probe': run_probe,
}


def _write_json(path, text):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w') as handle:
        handle.write(text)


def write_companion(data, report_path, suffix):
    """Write ``data`` next to the report as <stem>.<suffix>.json and return that path."""
    stem, _ = os.path.splitext(report_path)
    path = f'{stem}.{suffix}.json'
    _write_json(path, json.dumps(data, sort_keys=True, indent=2) + '\n')
    return path


def write_report(report, path):
    text = json.dumps(ReportSerializer(report).data, sort_keys=True, indent=2) + '\n'
    _write_json(path, text)
    return text


def run(config, save=''):
    """Execute ``config``; returns (exit status, report). Exit 0 iff the report passes."""
    rng = random.Random(config.seed)
    with worker_limit(config.threads):
        if config.command == 'rep_build':
            report, rep = run_rep_build(config, rng)
            if save:
                serialize_rep(rep, save)
                report.details['saved_to'] = save
        else:
            report = RUNNERS[config.command](config, rng)
    report.params.setdefault('seed', config.seed)
    path = config.output_path
    if path:
        write_report(report, path)
        logger.info('report written to %s', path)
    if report.ok:
        logger.info(report.summary())
    else:
        logger.error('%s; first failure %s', report.summary(), report.failures[:1])
    return (0 if report.ok else 1), report
