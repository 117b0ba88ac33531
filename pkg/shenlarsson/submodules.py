# shenlarsson/submodules.py

"""
Graded subspaces of F^{alpha,beta}(V) on a finite box of grades: the closure
engine, the explicit submodules of the trivial, natural and fundamental
modules, the wedge witnesses for W_r^k ∩ Ker(theta_k) and the
irreducibility probes.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import comb

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .conf import hamlie_setting
from .exceptions import DegenerateGradeError, InvalidRankError, OutsideBoxError, RepresentationError
from .hamiltonian import ModuleParams, apply_H_block, graded
from .linalg import ZERO, Subspace, as_scalar, nullspace, unit_vector, vector_add
from .reports import FULL, INCONCLUSIVE, PROPER, Report
from .reps import contraction_theta, natural_rep
from .symplectic import bar, build_sp
from .utils import grade_key, is_integral, random_generic_vector, random_lattice_vector, random_payload, worker_pool

logger = logging.getLogger(__name__)

TRUNCATION_NOTE = ('FULL only says every seed saturates the inner box; '
                   'a finite window cannot certify irreducibility')


@dataclass(frozen=True)
class Box:
    radius: int
    N: int

    def __post_init__(self):
        if self.radius < 0:
            raise OutsideBoxError(f'box radius must be non-negative, got {self.radius}')

    def contains(self, grade):
        return all(-self.radius <= g <= self.radius for g in grade)

    @cached_property
    def grades(self):
        span = range(-self.radius, self.radius + 1)
        return tuple(product(span, repeat=self.N))

    def inner(self, gens):
        """Grades at distance >= gens.radius from the boundary."""
        if gens.radius > self.radius:
            raise OutsideBoxError(f'generator radius {gens.radius} exceeds box radius {self.radius}')
        return Box(self.radius - gens.radius, self.N)


@dataclass(frozen=True)
class GeneratorSet:
    radius: int
    N: int

    def __post_init__(self):
        if self.radius < 1:
            raise OutsideBoxError(f'generator radius must be positive, got {self.radius}')

    @cached_property
    def vectors(self):
        span = range(-self.radius, self.radius + 1)
        return tuple(r for r in product(span, repeat=self.N) if any(r))

    def __len__(self):
        return len(self.vectors)


@dataclass
class TruncatedModule:
    params: ModuleParams
    box: Box
    spaces: dict = field(default_factory=dict)  # grade -> nonzero Subspace

    def space(self, grade):
        return self.spaces.get(tuple(grade), Subspace.zero(self.params.rep.dim))

    def set_space(self, grade, subspace):
        grade = tuple(grade)
        if not self.box.contains(grade):
            raise OutsideBoxError(f'grade {grade} outside the box of radius {self.box.radius}')
        if subspace.ambient_dim != self.params.rep.dim:
            raise RepresentationError('subspace does not live in V')
        if subspace.is_zero():
            self.spaces.pop(grade, None)
        else:
            self.spaces[grade] = subspace

    def dim(self, grade):
        return self.space(grade).dim

    def profile(self, grades):
        return {grade_key(g): self.dim(g) for g in grades}

    def is_full_on(self, grades):
        return all(self.space(g).is_full() for g in grades)

    def contains_family(self, other, grades):
        """other(g) ⊆ self(g) at every listed grade."""
        return all(other.space(g).issubspace(self.space(g)) for g in grades)

    def same_on(self, other, grades):
        return all(self.space(g) == other.space(g) for g in grades)

    def to_dict(self):
        return {
            'alpha': list(self.params.alpha),
            'beta': list(self.params.beta),
            'rep_ref': self.params.rep.name,
            'box_radius': self.box.radius,
            'spaces': {grade_key(g): [list(b) for b in s.basis] for g, s in sorted(self.spaces.items())},
        }


def zero_family(p, box):
    return TruncatedModule(p, box)


def full_family(p, box):
    full = Subspace.full(p.rep.dim)
    return TruncatedModule(p, box, {g: full for g in box.grades})


def closure(seeds, p, box, gens, base=None, threads=None):
    """Smallest family containing ``seeds`` (and ``base``) stable under every H_r, r in gens, inside the box.

    ``base`` must already be invariant; only the seeds and what they generate are propagated.
    Grades are processed one at a time: the block of vectors that enlarged a grade since it was
    last visited is pushed through every H_r at once.
    """
    spaces = dict(base.spaces) if base is not None else {}
    zero = Subspace.zero(p.rep.dim)
    pending = {}
    queue = deque()

    def push(grade, vectors):
        extended, added = spaces.get(grade, zero).adjoin(vectors)
        if not added:
            return
        spaces[grade] = extended
        if grade not in pending:
            pending[grade] = []
            queue.append(grade)
        pending[grade].extend(added)

    for seed in seeds:
        if not box.contains(seed.grade):
            raise OutsideBoxError(f'seed grade {seed.grade} outside the box of radius {box.radius}')
        push(seed.grade, [seed.payload])

    steps = 0
    with worker_pool(threads) as pool_map:
        while queue:
            grade = queue.popleft()
            block = pending.pop(grade)
            steps += len(block)
            moves = []
            for r in gens.vectors:
                target = tuple(a + b for a, b in zip(grade, r))
                if box.contains(target) and not spaces.get(target, zero).is_full():
                    moves.append((r, target))

            def image(move, grade=grade, block=block):
                r, target = move
                return target, apply_H_block(r, grade, block, p)

            for target, images in pool_map(image, moves):
                push(target, images)
    logger.debug('closure: %d vectors propagated, %d nonzero grades', steps, len(spaces))
    return TruncatedModule(p, box, spaces)


def invariance_check(family, gens):
    """act_H(r) maps family(s) into family(s + r) whenever both grades lie in the box."""
    p, box = family.params, family.box
    report = Report('invariance', params={**p.describe(), 'box': box.radius, 'gens': gens.radius})
    for grade, space in sorted(family.spaces.items()):
        for r in gens.vectors:
            target = tuple(a + b for a, b in zip(grade, r))
            if not box.contains(target):
                continue
            image_space = family.space(target)
            images = apply_H_block(r, grade, space.basis, p)
            bad = next((b for b, v in zip(space.basis, images) if not image_space.contains(v)), None)
            failure = None if bad is None else {'grade': list(grade), 'r': list(r), 'vector': list(bad)}
            report.record(bad is None, failure)
    if report.failure_count:
        logger.error('invariance: %d violations, first %s', report.failure_count, report.failures[0])
    return report


def is_trivial_rep(rep):
    return rep.dim == 1 and all(rep.rho(label).is_zero() for label in rep.alg.labels)


def is_natural_rep(rep):
    return rep.dim == rep.alg.N and all(rep.rho(e.label) == e.matrix for e in rep.alg.elements)


def exterior_degree(rep):
    """k when ``rep`` is V(delta_k) realized inside Lambda^k (k = 1 for the natural module), else None."""
    if is_natural_rep(rep):
        return 1
    name = rep.name or ''
    if not name.startswith('fundamental:') or rep.embedding is None:
        return None
    k = int(name.split(':', 1)[1])
    if k < 2 or rep.embedding.ambient_dim != comb(rep.alg.N, k):
        return None
    if rep.embedding != theta_kernel(rep.alg, k):
        return None
    return k


theta_map = lru_cache(maxsize=None)(contraction_theta)


@lru_cache(maxsize=None)
def theta_kernel(alg, k):
    return nullspace(theta_map(alg, k).matrix)


def wedge_with_units(u, k):
    """Spanning set of u ∧ Lambda^{k-1}, in the strictly increasing index basis of Lambda^k."""
    N = len(u)
    index = {t: i for i, t in enumerate(combinations(range(N), k))}
    vectors = []
    for rest in combinations(range(N), k - 1):
        v = [ZERO] * len(index)
        for j, c in enumerate(u):
            if not c or j in rest:
                continue
            t = tuple(sorted(rest + (j,)))
            sign = -1 if t.index(j) % 2 else 1
            v[index[t]] += sign * c
        vectors.append(tuple(v))
    return vectors


def wedge(vectors):
    """v_1 ∧ ... ∧ v_k in the strictly increasing index basis of Lambda^k."""
    vectors = [tuple(v) for v in vectors]
    N = len(vectors[0])
    k = len(vectors)
    coords = []
    for t in combinations(range(N), k):
        coords.append(_det([[v[j] for j in t] for v in vectors]))
    return tuple(coords)


def _det(rows):
    k = len(rows)
    return DomainMatrix([[as_scalar(x) for x in row] for row in rows], (k, k), QQ).det()


def wedge_space(p, k, grade):
    """W_grade^k ∩ Ker(theta_k) (or span{grade + alpha} for k = 1), in V coordinates."""
    u = vector_add(grade, p.alpha)
    dim = p.rep.dim
    if not any(u):
        return Subspace.zero(dim)
    if k == 1:
        return Subspace.span(dim, [u])
    kernel = p.rep.embedding
    W = Subspace.span(kernel.ambient_dim, wedge_with_units(u, k))
    meet = W.intersect(kernel)
    return Subspace.span(dim, [kernel.coordinates(v) for v in meet.basis])


def build_submodule(kind, p, box):
    rep = p.rep
    integral = is_integral(p.alpha)
    family = TruncatedModule(p, box)
    if kind == 'trivial_line':
        if not is_trivial_rep(rep):
            raise RepresentationError(f'trivial_line needs the trivial module, got {rep.name!r}')
        if not integral:
            raise RepresentationError('trivial_line needs an integral alpha')
        anchor = tuple(-int(a) for a in p.alpha)
        if box.contains(anchor):
            family.set_space(anchor, Subspace.full(1))
        else:
            logger.warning('grade %s of the trivial line lies outside the box', anchor)
        return family
    if kind == 'delta1':
        if not is_natural_rep(rep):
            raise RepresentationError(f'delta1 needs the natural module, got {rep.name!r}')
        k = 1
    elif kind == 'deltak':
        k = exterior_degree(rep)
        if k is None or k < 2:
            raise RepresentationError(f'deltak needs a fundamental module V(delta_k) with k >= 2, got {rep.name!r}')
    else:
        raise RepresentationError(f'unknown submodule kind {kind!r}')

    anchor = tuple(-int(a) for a in p.alpha) if integral else None
    for grade in box.grades:
        if k >= 2 and grade == anchor:
            family.set_space(grade, Subspace.full(rep.dim))
        else:
            family.set_space(grade, wedge_space(p, k, grade))
    logger.info('%s family on box %d: %d nonzero grades', kind, box.radius, len(family.spaces))
    return family


def claim2_chain(u, k):
    """r + alpha followed by k - 1 vectors, each from the common annihilator of the earlier ones and their bars."""
    chain = [tuple(u)]
    N = len(u)
    for _ in range(k - 1):
        constraints = Subspace.span(N, chain + [bar(v) for v in chain])
        candidates = constraints.annihilator()
        if candidates.is_zero():
            raise DegenerateGradeError('ran out of room for the next wedge factor')
        chain.append(candidates.basis[0])
    return chain


def claim2_witness(p, r, k):
    """A nonzero element of W_r^k ∩ Ker(theta_k) in Lambda^k coordinates."""
    n = p.n
    if not 1 <= k <= n:
        raise InvalidRankError(f'k must lie in 1..{n}, got {k}')
    u = vector_add(tuple(as_scalar(int(c)) for c in r), p.alpha)
    if not any(u):
        raise DegenerateGradeError(f'r + alpha = 0 at r = {tuple(r)}: W_r^k is zero')
    if k == 1:
        return u
    w = wedge(claim2_chain(u, k))
    theta = theta_map(p.rep.alg, k)
    if not any(w) or any(theta.matrix.apply(w)):
        raise RepresentationError(f'wedge witness at r = {tuple(r)} is not a nonzero kernel element')
    return w


def claim2_sweep(samples, n_max, rng, radius=3):
    report = Report('claim2-witness', params={'samples': samples, 'n_max': n_max})
    if n_max < 2:
        raise InvalidRankError(f'claim2 sweep needs n_max >= 2, got {n_max}')
    for _ in range(samples):
        n = rng.randint(2, n_max)
        k = rng.randint(2, n)
        alg = build_sp(n)
        p = ModuleParams(random_generic_vector(rng, 2 * n), (0,) * (2 * n), natural_rep(alg))
        r = random_lattice_vector(rng, 2 * n, radius)
        case = {'n': n, 'k': k, 'r': list(r), 'alpha': list(p.alpha)}
        try:
            w = claim2_witness(p, r, k)
        except RepresentationError:
            report.record(False, case)
            continue
        in_W = Subspace.span(len(w), wedge_with_units(vector_add(r, p.alpha), k)).contains(w)
        report.record(in_W, case)
    return report


def _probe_seeds(p, box, gens, rng, random_seeds):
    inner = box.inner(gens)
    dim = p.rep.dim
    origin = (0,) * p.N
    seeds = [(f'e{i + 1}@0', graded(origin, unit_vector(dim, i))) for i in range(dim)]
    for j in range(random_seeds):
        payload = random_payload(rng, dim)
        if any(payload):
            seeds.append((f'random{j + 1}@0', graded(origin, payload)))
    if is_integral(p.alpha):
        anchor = tuple(-int(a) for a in p.alpha)
        if anchor != origin and inner.contains(anchor):
            seeds += [(f'e{i + 1}@-alpha', graded(anchor, unit_vector(dim, i))) for i in range(dim)]
    k = exterior_degree(p.rep)
    if k is not None:
        grade = origin if any(p.alpha) else tuple(1 if i == 0 else 0 for i in range(p.N))
        space = wedge_space(p, k, grade)
        seeds += [(f'wedge{i + 1}@{grade_key(grade)}', graded(grade, b)) for i, b in enumerate(space.basis)]
    return seeds


def probe_families(p, box, gens, rng, random_seeds=None, threads=None):
    """[(seed name, seed, closure)] for every probe seed."""
    if random_seeds is None:
        random_seeds = hamlie_setting('PROBE_RANDOM_SEEDS')
    seeds = _probe_seeds(p, box, gens, rng, random_seeds)
    return [(name, seed, closure([seed], p, box, gens, threads=threads)) for name, seed in seeds]


def _verdict(report, families, inner, gens):
    proper = None
    for name, seed, family in families:
        if not family.is_full_on(inner.grades):
            invariance = invariance_check(family, gens)
            report.absorb(invariance, prefix=f'invariance[{name}]')
            if invariance.ok and proper is None:
                proper = name
    if proper is not None:
        report.verdict = PROPER
        report.details['proper_seed'] = proper
    elif all(family.is_full_on(inner.grades) for _, _, family in families):
        report.verdict = FULL
        report.notes.append(TRUNCATION_NOTE)
    else:
        report.verdict = INCONCLUSIVE


def irreducibility_probe(p, box, gens, rng, random_seeds=None, threads=None, families=None):
    inner = box.inner(gens)
    report = Report('probe', params={**p.describe(), 'box': box.radius, 'gens': gens.radius})
    if families is None:
        families = probe_families(p, box, gens, rng, random_seeds, threads)
    seeds = {}
    for name, seed, family in families:
        dims = family.profile(inner.grades)
        seeds[name] = {
            'seed': seed.to_dict(),
            'min_dim': min(dims.values()),
            'max_dim': max(dims.values()),
            'non_full_grades': sum(1 for d in dims.values() if d < p.rep.dim),
            'dims': dims,
        }
    report.details['seeds'] = seeds
    report.details['inner_radius'] = inner.radius
    _verdict(report, families, inner, gens)
    logger.info('probe %s alpha=%s: %s', p.rep.name, list(map(str, p.alpha)), report.verdict)
    return report


def quotient_probe(p, box, gens, rng, samples=3):
    """The quotient of F^alpha(V(delta_0)) by the trivial line, probed on the inner box."""
    base = build_submodule('trivial_line', p, box)
    inner = box.inner(gens)
    anchor = tuple(-int(a) for a in p.alpha)
    grades = [g for g in inner.grades if g != anchor]
    picks = [grades[len(grades) // 2]] + [rng.choice(grades) for _ in range(samples - 1)]
    report = Report('quotient-probe', params={**p.describe(), 'box': box.radius, 'gens': gens.radius})
    families = []
    for grade in picks:
        family = closure([graded(grade, (1,))], p, box, gens, base=base)
        families.append((f'1@{grade_key(grade)}', graded(grade, (1,)), family))
        report.details.setdefault('quotient_dims', {})[grade_key(grade)] = sum(
            family.dim(g) - base.dim(g) for g in inner.grades)
    report.details['inner_grades'] = len(inner.grades) - (1 if inner.contains(anchor) else 0)
    _verdict(report, families, inner, gens)
    return report


def claim_m_nonzero(p, seed, box, gens, family=None):
    """M = ∩_r P_r over the inner box for P generated by ``seed``, with its sp_N-stability."""
    inner = box.inner(gens)
    if family is None:
        family = closure([seed], p, box, gens)
    M = Subspace.full(p.rep.dim)
    for grade in inner.grades:
        M = M.intersect(family.space(grade))
        if M.is_zero():
            break
    report = Report('claim-m', params={**p.describe(), 'seed': seed.to_dict(), 'box': box.radius})
    for label in p.rep.alg.labels:
        rho = p.rep.rho(label)
        report.record(all(M.contains(rho.apply(v)) for v in M.basis), {'label': label})
    report.details['dim_M'] = M.dim
    report.details['proper'] = not family.is_full_on(inner.grades)
    return report


def claim1_inequality(n_max):
    """C(2n, k) - C(2n, k-2) > C(2n-1, k-1) for 2 <= k <= n <= n_max.

    The inequality fails on the diagonal k = n once n >= 6; those pairs are listed in the notes.
    """
    if n_max < 2:
        raise InvalidRankError(f'claim1 needs n_max >= 2, got {n_max}')
    report = Report('claim1-inequality', params={'n_max': n_max})
    counterexamples = []
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            lhs = comb(2 * n, k) - comb(2 * n, k - 2)
            rhs = comb(2 * n - 1, k - 1)
            report.record(lhs > rhs, {'n': n, 'k': k, 'dim': lhs, 'bound': rhs})
            if lhs <= rhs:
                counterexamples.append((n, k, lhs, rhs))
    if counterexamples:
        report.details['counterexamples'] = [list(c) for c in counterexamples]
        report.notes.append('dim V(delta_k) <= C(2n-1, k-1) at ' + ', '.join(
            f'(n, k) = ({n}, {k}): {lhs} <= {rhs}' for n, k, lhs, rhs in counterexamples))
    return report
