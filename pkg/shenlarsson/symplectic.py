# shenlarsson/symplectic.py

"""
The symplectic Lie algebra sp_N (N = 2n) in its natural representation.

Basis normalization: h_i = e_ii - e_{n+i,n+i}, X(ei-ej) = e_ij - e_{n+j,n+i},
X(ek+el) = e_{k,n+l} + e_{l,n+k}, X(-ek-el) = e_{n+k,l} + e_{n+l,k}, so the
long root vectors are X(2ek) = 2 e_{k,n+k} and X(-2ek) = 2 e_{n+k,k}.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import DimensionMismatch, InvalidRankError, InvalidRootError, NotInSpanError
from .linalg import ONE, ZERO, SparseMatrix, as_scalar
from .reports import Report

logger = logging.getLogger(__name__)


def _term(coefficient, index):
    name = f'e{index}'
    if coefficient == 1:
        return name
    if coefficient == -1:
        return f'-{name}'
    return f'{coefficient}{name}'


def root_label(root):
    """Label of the root vector X_root, e.g. X(e1-e2), X(2e1), X(-e1-e2)."""
    text = ''
    for index, coefficient in enumerate(root, start=1):
        if not coefficient:
            continue
        term = _term(coefficient, index)
        if text and not term.startswith('-'):
            text += '+'
        text += term
    return f'X({text})'


@dataclass(frozen=True)
class BasisElement:
    label: str
    kind: str  # 'cartan', 'short', 'plus' or 'minus'
    indices: tuple  # 1-based
    root: tuple  # epsilon coordinates, zero for the Cartan part
    matrix: SparseMatrix
    probe: tuple  # (row, col, scale): coefficient = scale * m[row, col]

    @property
    def is_positive(self):
        return any(self.root) and next(c for c in self.root if c) > 0

    @property
    def is_negative(self):
        return any(self.root) and not self.is_positive


@dataclass(frozen=True)
class RootDatum:
    root: tuple
    simple_coeffs: tuple
    height: int


class SpAlgebra:
    """sp_{2n} with its ordered basis; immutable after construction."""

    def __init__(self, n, elements):
        self.n = n
        self.N = 2 * n
        self.elements = tuple(elements)
        self.labels = tuple(e.label for e in self.elements)
        self._by_label = {e.label: e for e in self.elements}
        self._by_root = {e.root: e for e in self.elements if e.kind != 'cartan'}

    def __repr__(self):
        return f'SpAlgebra(n={self.n}, dim={self.dim})'

    @property
    def dim(self):
        return len(self.elements)

    @property
    def simple_roots(self):
        return simple_roots(self.n)

    def element(self, label):
        return self._by_label[label]

    def matrix(self, label):
        return self._by_label[label].matrix

    def root_vector(self, root):
        return self._by_root[tuple(root)]

    def cartan(self):
        return [e for e in self.elements if e.kind == 'cartan']

    def positive(self):
        return [e for e in self.elements if e.is_positive]

    def negative(self):
        return [e for e in self.elements if e.is_negative]

    def outer_bar_coefficients(self, u):
        """Coefficients of u ū^t in the basis, read off without building the matrix.

        Works for any ring the entries of ``u`` live in (rationals or polynomials).
        """
        u_bar = bar(u)
        return {e.label: u[e.probe[0]] * u_bar[e.probe[1]] * e.probe[2] for e in self.elements}

    def combination(self, coefficients):
        total = SparseMatrix.zeros(self.N, self.N)
        for label, c in coefficients.items():
            if c:
                total = total + self.matrix(label).scale(c)
        return total


def _build_elements(n):
    N = 2 * n
    half = as_scalar('1/2')

    def mat(entries):
        return SparseMatrix.from_entries(N, N, entries)

    def add(entries, i, j, value):
        entries[(i, j)] = entries.get((i, j), ZERO) + value

    elements = []
    for i in range(n):
        root = (0,) * n
        elements.append(BasisElement(
            f'h{i + 1}', 'cartan', (i + 1,), root,
            mat({(i, i): ONE, (n + i, n + i): -ONE}), (i, i, ONE)))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            root = tuple(1 if a == i else -1 if a == j else 0 for a in range(n))
            elements.append(BasisElement(
                root_label(root), 'short', (i + 1, j + 1), root,
                mat({(i, j): ONE, (n + j, n + i): -ONE}), (i, j, ONE)))
    for sign, kind in ((1, 'plus'), (-1, 'minus')):
        for k in range(n):
            for l in range(k, n):
                root = tuple(sign * ((a == k) + (a == l)) for a in range(n))
                entries = {}
                if sign > 0:
                    add(entries, k, n + l, ONE)
                    add(entries, l, n + k, ONE)
                    probe = (k, n + l, half if k == l else ONE)
                else:
                    add(entries, n + k, l, ONE)
                    add(entries, n + l, k, ONE)
                    probe = (n + k, l, half if k == l else ONE)
                elements.append(BasisElement(
                    root_label(root), kind, (k + 1, l + 1), root, mat(entries), probe))
    return elements


def bracket(x, y):
    """Matrix commutator xy - yx."""
    if x.rows != x.cols or x.shape != y.shape:
        raise DimensionMismatch(f'bracket needs equal square matrices, got {x.shape} and {y.shape}')
    return x @ y - y @ x


def bar(r):
    """r = (r_1..r_n, r_{n+1}..r_2n) -> (r_{n+1}..r_2n, -r_1..-r_n)."""
    if len(r) % 2:
        raise DimensionMismatch(f'bar needs an even-length vector, got length {len(r)}')
    n = len(r) // 2
    return tuple(r[n:]) + tuple(-x for x in r[:n])


def pairing(u, v):
    """The standard bilinear form sum u_i v_i."""
    if len(u) != len(v):
        raise DimensionMismatch(f'pairing of vectors of lengths {len(u)} and {len(v)}')
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return as_scalar(total)


def symplectic_form(n):
    """The matrix J with J v = bar(v)."""
    entries = {}
    for i in range(n):
        entries[(i, n + i)] = ONE
        entries[(n + i, i)] = -ONE
    return SparseMatrix.from_entries(2 * n, 2 * n, entries)


def outer(u, v):
    """Rank-one matrix u v^t."""
    entries = {}
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                entries[(i, j)] = as_scalar(a) * as_scalar(b)
    return SparseMatrix.from_entries(len(u), len(v), entries)


def sp_decompose(m, alg):
    """Exact coefficients of ``m`` in the basis of ``alg``, in basis order."""
    if m.shape != (alg.N, alg.N):
        raise DimensionMismatch(f'expected a {alg.N}x{alg.N} matrix, got {m.shape}')
    coefficients = {e.label: m.get(e.probe[0], e.probe[1]) * e.probe[2] for e in alg.elements}
    if alg.combination(coefficients) != m:
        raise NotInSpanError('matrix is not in sp_N')
    return coefficients


def is_symplectic(m, J):
    return (m.transpose() @ J + J @ m).is_zero()


def simple_roots(n):
    """alpha_i = e_i - e_{i+1} for i < n and alpha_n = 2 e_n."""
    roots = [tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n)) for i in range(n - 1)]
    roots.append(tuple(2 if j == n - 1 else 0 for j in range(n)))
    return roots


def positive_roots(n):
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(tuple(1 if a == i else -1 if a == j else 0 for a in range(n)))
    for k in range(n):
        for l in range(k, n):
            roots.append(tuple((a == k) + (a == l) for a in range(n)))
    return roots


def root_height(root, n):
    """Simple-root coefficients and height of a positive root of sp_2n."""
    root = tuple(int(c) for c in root)
    if len(root) != n:
        raise InvalidRootError(f'root {root} does not have {n} coordinates')
    if root not in set(positive_roots(n)):
        raise InvalidRootError(f'{root} is not a positive root of sp_{2 * n}')
    coeffs = []
    running = 0
    for i in range(n - 1):
        running += root[i]
        coeffs.append(running)
    last, remainder = divmod(root[n - 1] + running, 2)
    if remainder:
        raise InvalidRootError(f'{root} is not in the root lattice')
    coeffs.append(last)
    rebuilt = tuple(sum(c * alpha[j] for c, alpha in zip(coeffs, simple_roots(n))) for j in range(n))
    if rebuilt != root:
        raise InvalidRootError(f'{root} does not expand as {coeffs} over the simple roots')
    return RootDatum(root, tuple(coeffs), sum(coeffs))


def height_closed_form(root, n):
    """Closed forms H(ei - ej) = j - i and H(ei + ej) = 2n - (i + j) + 1 (1-based, i <= j)."""
    support = [i + 1 for i, c in enumerate(root) for _ in range(abs(c))]
    if any(c < 0 for c in root):
        i, j = support
        return j - i
    i, j = support
    return 2 * n - (i + j) + 1


def fundamental_weight(k, n):
    """delta_k = e_1 + ... + e_k in epsilon coordinates; delta_0 = 0."""
    if not 0 <= k <= n:
        raise InvalidRankError(f'fundamental weight index {k} outside 0..{n}')
    return tuple(1 if i < k else 0 for i in range(n))


@lru_cache(maxsize=None)
def build_sp(n, verify=True):
    if n < 1:
        raise InvalidRankError(f'sp_2n needs n >= 1, got {n}')
    alg = SpAlgebra(n, _build_elements(n))
    if verify:
        J = symplectic_form(n)
        for e in alg.elements:
            if not is_symplectic(e.matrix, J):
                raise NotInSpanError(f'{e.label} violates the symplectic condition')
        for a in range(alg.dim):
            for b in range(a + 1, alg.dim):
                sp_decompose(bracket(alg.elements[a].matrix, alg.elements[b].matrix), alg)
    logger.info('built sp_%d, dim %d', alg.N, alg.dim)
    return alg


def check_structure(alg, samples, rng, radius=5):
    """Closure, symplectic condition and r r̄^t membership for sp-check."""
    report = Report('sp-structure', params={'n': alg.n, 'samples': samples})
    for a in range(alg.dim):
        for b in range(a, alg.dim):
            x, y = alg.elements[a], alg.elements[b]
            try:
                sp_decompose(bracket(x.matrix, y.matrix), alg)
                report.record(True)
            except NotInSpanError:
                report.record(False, {'kind': 'closure', 'pair': [x.label, y.label]})
    J = symplectic_form(alg.n)
    for e in alg.elements:
        report.record(is_symplectic(e.matrix, J), {'kind': 'symplectic', 'label': e.label})
    for _ in range(samples):
        r = tuple(rng.randint(-radius, radius) for _ in range(alg.N))
        try:
            sp_decompose(outer(r, bar(r)), alg)
            report.record(True)
        except NotInSpanError:
            report.record(False, {'kind': 'r_rbar_membership', 'r': list(r)})
    report.details['dim'] = alg.dim
    return report


def check_antisymmetry(n, samples, rng, radius=20):
    report = Report('pairing-antisymmetry', params={'n': n, 'samples': samples})
    for _ in range(samples):
        r = tuple(rng.randint(-radius, radius) for _ in range(2 * n))
        s = tuple(rng.randint(-radius, radius) for _ in range(2 * n))
        lhs, rhs = pairing(bar(r), s), -pairing(bar(s), r)
        report.record(lhs == rhs, {'r': list(r), 's': list(s), 'lhs': lhs, 'rhs': rhs})
    return report


def check_heights(n_max):
    report = Report('root-height', params={'n_max': n_max})
    for n in range(1, n_max + 1):
        for root in positive_roots(n):
            datum = root_height(root, n)
            expected = height_closed_form(root, n)
            report.record(datum.height == expected,
                          {'n': n, 'root': list(root), 'height': datum.height, 'closed_form': expected})
    return report
