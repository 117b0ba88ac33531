# shenlarsson/reps.py

"""
Finite-dimensional representations of sp_2n: the natural module, exterior
and symmetric powers, the contraction maps theta_k and the fundamental
modules V(delta_k) = Ker(theta_k).
"""
import logging
import threading
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from sympy.combinatorics import Permutation

from .exceptions import DimensionMismatch, RepresentationError
from .linalg import ZERO, SparseMatrix, Subspace, nullspace, rank, unit_vector
from .reports import Report
from .symplectic import bar, bracket, outer, pairing, sp_decompose
from .utils import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Representation:
    alg: object
    dim: int
    basis_labels: tuple
    action: dict
    weights: tuple
    name: str = ''
    embedding: Subspace = None  # basis inside the parent's space, for subrepresentations
    parent: object = None
    _outer_cache: dict = field(default_factory=dict, repr=False)
    _lock: object = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        for label, matrix in self.action.items():
            if matrix.shape != (self.dim, self.dim):
                raise DimensionMismatch(f'action of {label} has shape {matrix.shape}, expected {self.dim}x{self.dim}')
        if len(self.weights) != self.dim or len(self.basis_labels) != self.dim:
            raise DimensionMismatch('weights and labels must have one entry per basis vector')

    def __repr__(self):
        return f'Representation({self.name or "?"}, n={self.alg.n}, dim={self.dim})'

    def rho(self, label):
        return self.action[label]

    def rho_combination(self, coefficients):
        total = SparseMatrix.zeros(self.dim, self.dim)
        for label, c in coefficients.items():
            if c:
                total = total + self.action[label].scale(c)
        return total

    def rho_matrix(self, m):
        """rho of an arbitrary element of sp_N given as an N x N matrix."""
        return self.rho_combination(sp_decompose(m, self.alg))

    def rho_outer_bar(self, r):
        """rho(r r̄^t), memoized per r."""
        key = tuple(r)
        cached = self._outer_cache.get(key)
        if cached is not None:
            return cached
        matrix = self.rho_matrix(outer(key, bar(key)))
        with self._lock:
            self._outer_cache.setdefault(key, matrix)
        return self._outer_cache[key]


@dataclass(frozen=True)
class LinearMap:
    source: Representation
    target: Representation
    matrix: SparseMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(
                f'map matrix {self.matrix.shape} does not fit {self.source.dim} -> {self.target.dim}')


def natural_weights(n):
    weights = []
    for i in range(2 * n):
        sign = 1 if i < n else -1
        weights.append(tuple(sign if a == i % n else 0 for a in range(n)))
    return tuple(weights)


def natural_rep(alg):
    action = {e.label: e.matrix for e in alg.elements}
    labels = tuple(f'e{i + 1}' for i in range(alg.N))
    return Representation(alg, alg.N, labels, action, natural_weights(alg.n), name='natural')


def trivial_rep(alg):
    action = {label: SparseMatrix.zeros(1, 1) for label in alg.labels}
    return Representation(alg, 1, ('1',), action, ((0,) * alg.n,), name='trivial')


def _sorted_with_sign(seq):
    """Sorted copy of ``seq`` (distinct entries) and the signature of the sorting permutation."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    if len(order) < 2:
        return tuple(seq), 1
    return tuple(seq[i] for i in order), Permutation(order).signature()


def _columns(matrix):
    columns = {}
    for i, row in matrix.row_dicts.items():
        for j, v in row.items():
            columns.setdefault(j, []).append((i, v))
    return columns


def _add_weights(weights, indices, n):
    total = [0] * n
    for i in indices:
        for a, w in enumerate(weights[i]):
            total[a] += w
    return tuple(total)


def _wedge_label(indices, base_labels):
    return '^'.join(base_labels[i] for i in indices) if indices else '1'


def exterior_power(rep, k):
    """Lambda^k of ``rep`` on the basis of strictly increasing index tuples."""
    if not 0 <= k <= rep.dim:
        raise RepresentationError(f'exterior power {k} of a {rep.dim}-dimensional module')
    basis = list(combinations(range(rep.dim), k))
    index = {t: i for i, t in enumerate(basis)}

    def matrix_for(label):
        columns = _columns(rep.rho(label))
        entries = {}
        for col, t in enumerate(basis):
            for slot, i in enumerate(t):
                for a, v in columns.get(i, ()):
                    if a != i and a in t:
                        continue
                    replaced, sign = _sorted_with_sign(t[:slot] + (a,) + t[slot + 1:])
                    key = (index[replaced], col)
                    entries[key] = entries.get(key, ZERO) + sign * v
        return SparseMatrix.from_entries(len(basis), len(basis), entries)

    matrices = parallel_map(matrix_for, rep.alg.labels)
    return Representation(
        rep.alg, len(basis),
        tuple(_wedge_label(t, rep.basis_labels) for t in basis),
        dict(zip(rep.alg.labels, matrices)),
        tuple(_add_weights(rep.weights, t, rep.alg.n) for t in basis),
        name=f'exterior:{k}' if rep.name == 'natural' else f'exterior:{k}({rep.name})',
    )


def symmetric_power(rep, k):
    """Sym^k of ``rep`` on the basis of weakly increasing index tuples (monomials)."""
    if k < 0:
        raise RepresentationError(f'symmetric power {k}')
    basis = list(combinations_with_replacement(range(rep.dim), k))
    index = {t: i for i, t in enumerate(basis)}

    def matrix_for(label):
        columns = _columns(rep.rho(label))
        entries = {}
        for col, t in enumerate(basis):
            for slot, i in enumerate(t):
                for a, v in columns.get(i, ()):
                    replaced = tuple(sorted(t[:slot] + (a,) + t[slot + 1:]))
                    key = (index[replaced], col)
                    entries[key] = entries.get(key, ZERO) + v
        return SparseMatrix.from_entries(len(basis), len(basis), entries)

    matrices = parallel_map(matrix_for, rep.alg.labels)
    return Representation(
        rep.alg, len(basis),
        tuple('*'.join(rep.basis_labels[i] for i in t) if t else '1' for t in basis),
        dict(zip(rep.alg.labels, matrices)),
        tuple(_add_weights(rep.weights, t, rep.alg.n) for t in basis),
        name=f'sym:{k}' if rep.name == 'natural' else f'sym:{k}({rep.name})',
    )


def _pair_units(a, b, N):
    """(e_a, bar(e_b))."""
    return pairing(unit_vector(N, a), bar(unit_vector(N, b)))


def contraction_theta(alg, k):
    """theta_k : Lambda^k -> Lambda^{k-2}, summing over slot pairs r < s with sign (-1)^(r+s-1)."""
    if k < 2 or k > alg.N:
        raise RepresentationError(f'theta_k needs 2 <= k <= {alg.N}, got {k}')
    natural = natural_rep(alg)
    source = exterior_power(natural, k)
    target = exterior_power(natural, k - 2)
    target_index = {t: i for i, t in enumerate(combinations(range(alg.N), k - 2))}
    entries = {}
    for col, t in enumerate(combinations(range(alg.N), k)):
        for r in range(k):
            for s in range(r + 1, k):
                value = _pair_units(t[r], t[s], alg.N)
                if not value:
                    continue
                sign = -1 if (r + s + 2 - 1) % 2 else 1
                rest = t[:r] + t[r + 1:s] + t[s + 1:]
                key = (target_index[rest], col)
                entries[key] = entries.get(key, ZERO) + sign * value
    return LinearMap(source, target, SparseMatrix.from_entries(target.dim, source.dim, entries))


def subrepresentation(rep, subspace, name=''):
    """Restriction of ``rep`` to an invariant subspace, on its RREF basis."""
    if subspace.ambient_dim != rep.dim:
        raise DimensionMismatch('subspace lives in a different space')

    def matrix_for(label):
        rho = rep.rho(label)
        entries = {}
        for j, b in enumerate(subspace.basis):
            image = rho.apply(b)
            if not subspace.contains(image):
                raise RepresentationError(f'subspace is not stable under {label}')
            for i, c in enumerate(subspace.coordinates(image)):
                if c:
                    entries[(i, j)] = c
        return SparseMatrix.from_entries(subspace.dim, subspace.dim, entries)

    matrices = parallel_map(matrix_for, rep.alg.labels)
    labels = tuple(f'v{i + 1}' for i in range(subspace.dim))
    weights = tuple(rep.weights[p] for p in subspace.pivots)
    return Representation(rep.alg, subspace.dim, labels, dict(zip(rep.alg.labels, matrices)), weights,
                          name=name, embedding=subspace, parent=rep)


def dimension_formula(n, k):
    """dim V(delta_k) = C(2n, k) - C(2n, k-2)."""
    return comb(2 * n, k) - (comb(2 * n, k - 2) if k >= 2 else 0)


def fundamental_rep(alg, k):
    if not 0 <= k <= alg.n:
        raise RepresentationError(f'V(delta_{k}) needs 0 <= k <= {alg.n}')
    if k == 0:
        return trivial_rep(alg)
    if k == 1:
        rep = natural_rep(alg)
        return Representation(rep.alg, rep.dim, rep.basis_labels, rep.action, rep.weights, name='fundamental:1')
    theta = contraction_theta(alg, k)
    kernel = nullspace(theta.matrix)
    rep = subrepresentation(theta.source, kernel, name=f'fundamental:{k}')
    logger.info('V(delta_%d) of sp_%d: dim %d', k, alg.N, rep.dim)
    return rep


def positive_root_stack(rep):
    """All rho(X_alpha), alpha > 0, stacked into one matrix."""
    entries = {}
    positive = rep.alg.positive()
    for block, element in enumerate(positive):
        for (i, j), v in rep.rho(element.label).entries().items():
            entries[(block * rep.dim + i, j)] = v
    return SparseMatrix.from_entries(len(positive) * rep.dim, rep.dim, entries)


def highest_weight_vectors(rep):
    """Basis of the vectors killed by every positive root vector, with their weights."""
    space = nullspace(positive_root_stack(rep))
    return [(v, rep.weights[p]) for v, p in zip(space.basis, space.pivots)]


def cyclic_span(rep, v):
    """Smallest rho-stable subspace containing ``v``."""
    space = Subspace.span(rep.dim, [v])
    frontier = list(space.basis)
    while frontier:
        new = []
        for w in frontier:
            for label in rep.alg.labels:
                image = rep.rho(label).apply(w)
                if not space.contains(image):
                    space = space.extend([image])
                    new.append(image)
        frontier = new
    return space


def is_irreducible(rep):
    if rep.dim < 1:
        raise RepresentationError('irreducibility of the zero module is undefined')
    if len(highest_weight_vectors(rep)) != 1:
        return False
    return all(cyclic_span(rep, unit_vector(rep.dim, i)).is_full() for i in range(rep.dim))


def highest_weight_module(rep, weight):
    """V(weight) realized as the cyclic span of a highest-weight vector of that weight inside ``rep``."""
    weight = tuple(weight)
    for v, w in highest_weight_vectors(rep):
        if w == weight:
            return subrepresentation(rep, cyclic_span(rep, v), name=f'highest:{",".join(map(str, weight))}')
    raise RepresentationError(f'no highest-weight vector of weight {weight} in {rep!r}')


def verify_intertwiner(f):
    report = Report('intertwiner', params={'source': f.source.name, 'target': f.target.name})
    for label in f.source.alg.labels:
        lhs = f.matrix @ f.source.rho(label)
        rhs = f.target.rho(label) @ f.matrix
        report.record(lhs == rhs, {'label': label})
    return report


def check_brackets(rep):
    """rho([x, y]) = [rho(x), rho(y)] for every pair of basis elements."""
    report = Report('bracket-preservation', params={'rep': rep.name, 'dim': rep.dim})
    elements = rep.alg.elements
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            x, y = elements[a], elements[b]
            lhs = rep.rho_matrix(bracket(x.matrix, y.matrix))
            rhs = bracket(rep.rho(x.label), rep.rho(y.label))
            report.record(lhs == rhs, {'pair': [x.label, y.label]})
    return report


def check_cartan_diagonal(rep):
    report = Report('cartan-diagonal', params={'rep': rep.name})
    for element in rep.alg.cartan():
        i = element.indices[0] - 1
        expected = SparseMatrix.from_entries(
            rep.dim, rep.dim, {(j, j): w[i] for j, w in enumerate(rep.weights) if w[i]})
        report.record(rep.rho(element.label) == expected, {'label': element.label})
    return report


def weight_multiset_symmetric(rep):
    """Weight multiset is stable under every sign change e_i -> -e_i."""
    counts = Counter(rep.weights)
    for i in range(rep.alg.n):
        flipped = Counter(tuple(-c if a == i else c for a, c in enumerate(w)) for w in rep.weights)
        if flipped != counts:
            return False
    return True


def check_nilpotent(rep):
    """Every root vector acts nilpotently, as it must on a finite-dimensional module."""
    report = Report('root-vectors-nilpotent', params={'rep': rep.name})
    for element in rep.alg.elements:
        if element.kind == 'cartan':
            continue
        power = SparseMatrix.identity(rep.dim)
        rho = rep.rho(element.label)
        for _ in range(rep.dim):
            power = power @ rho
            if power.is_zero():
                break
        report.record(power.is_zero(), {'label': element.label})
    return report


def check_theta(alg, k):
    """Equivariance, kernel dimension and rank of theta_k."""
    theta = contraction_theta(alg, k)
    report = verify_intertwiner(theta)
    report.check = 'theta'
    report.params.update({'n': alg.n, 'k': k})
    kernel_dim = nullspace(theta.matrix).dim
    expected = dimension_formula(alg.n, k)
    report.record(kernel_dim == expected, {'kind': 'kernel_dim', 'observed': kernel_dim, 'expected': expected})
    if k <= alg.n:
        theta_rank = rank(theta.matrix)
        report.record(theta_rank == comb(alg.N, k - 2),
                      {'kind': 'theta_rank', 'observed': theta_rank, 'expected': comb(alg.N, k - 2)})
    report.details['kernel_dim'] = kernel_dim
    return report
