# shenlarsson/hamiltonian.py

"""
The Hamiltonian Lie algebra acting on F^{alpha,beta}(V) = V (x) A_N:

    H_r (v (x) t^s) = ((r̄, s + alpha) I + rho(r r̄^t)) v (x) t^(r+s)
    d_i (v (x) t^s) = (s_i + beta_i) v (x) t^s

plus the matrix-valued polynomials g1(s), g2(s) built from two such actions.
"""
import logging
from dataclasses import dataclass
from functools import reduce

from sympy import QQ
from sympy.polys.rings import ring

from .exceptions import DimensionMismatch, GeneratorError
from .linalg import SparseMatrix, as_scalar, as_vector, vector_add, vector_scale, vector_sub
from .reports import Report
from .symplectic import bar, pairing
from .utils import parallel_map, random_generic_vector, random_lattice_vector, random_payload

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModuleParams:
    alpha: tuple
    beta: tuple
    rep: object

    def __post_init__(self):
        N = self.rep.alg.N
        object.__setattr__(self, 'alpha', as_vector(self.alpha))
        object.__setattr__(self, 'beta', as_vector(self.beta))
        if len(self.alpha) != N or len(self.beta) != N:
            raise DimensionMismatch(f'alpha and beta must have length {N}')

    @property
    def N(self):
        return self.rep.alg.N

    @property
    def n(self):
        return self.rep.alg.n

    def shifted(self, gamma):
        gamma = as_vector(gamma)
        return ModuleParams(vector_add(self.alpha, gamma), vector_add(self.beta, gamma), self.rep)

    def describe(self):
        return {'alpha': list(self.alpha), 'beta': list(self.beta), 'rep': self.rep.name, 'n': self.n}


@dataclass(frozen=True)
class GradedVector:
    grade: tuple
    payload: tuple

    def to_dict(self):
        return {'grade': list(self.grade), 'payload': list(self.payload)}


def graded(grade, payload):
    return GradedVector(tuple(int(g) for g in grade), as_vector(payload))


def _check_payload(x, p):
    if len(x.payload) != p.rep.dim or len(x.grade) != p.N:
        raise DimensionMismatch('graded vector does not match the module parameters')


def scalar_part(r, grade, p):
    """(r̄, grade + alpha)."""
    return pairing(bar(r), vector_add(grade, p.alpha))


def coefficient_matrix(r, grade, p):
    """((r̄, grade + alpha) I + rho(r r̄^t)), the H_r coefficient at ``grade``; it vanishes for r = 0."""
    identity = SparseMatrix.identity(p.rep.dim)
    return identity.scale(scalar_part(r, grade, p)) + p.rep.rho_outer_bar(r)


def apply_H(r, grade, payload, p):
    """Payload part of H_r(payload (x) t^grade)."""
    c = scalar_part(r, grade, p)
    moved = p.rep.rho_outer_bar(r).apply(payload)
    if not c:
        return moved
    return tuple(c * a + b for a, b in zip(payload, moved))


def apply_H_block(r, grade, block, p):
    """apply_H on every payload of ``block`` at ``grade``, sharing one coefficient operator."""
    c = scalar_part(r, grade, p)
    outer_bar = p.rep.rho_outer_bar(r)
    images = []
    for payload in block:
        moved = outer_bar.apply(payload)
        images.append(tuple(c * a + b for a, b in zip(payload, moved)) if c else moved)
    return images


def act_H(r, x, p):
    r = tuple(int(c) for c in r)
    if not any(r):
        raise GeneratorError('H_0 is not a generator of the Hamiltonian algebra')
    _check_payload(x, p)
    return GradedVector(tuple(a + b for a, b in zip(x.grade, r)), apply_H(r, x.grade, x.payload, p))


def act_d(i, x, p):
    if not 1 <= i <= p.N:
        raise GeneratorError(f'derivation index {i} outside 1..{p.N}')
    _check_payload(x, p)
    return GradedVector(x.grade, vector_scale(x.grade[i - 1] + p.beta[i - 1], x.payload))


def act_A(m, x):
    """Multiplication by t^m of the generalized jet-module structure."""
    return GradedVector(tuple(a + int(b) for a, b in zip(x.grade, m)), x.payload)


def verify_ham_bracket(r, s, x, p):
    """[H_r, H_s] x == (r̄, s) H_{r+s} x; None when r or s is zero.

    For r + s = 0 the right-hand side is the zero vector, since (r̄, -r) = 0.
    """
    r = tuple(int(c) for c in r)
    s = tuple(int(c) for c in s)
    if not any(r) or not any(s):
        return None
    lhs_rs = act_H(r, act_H(s, x, p), p)
    lhs_sr = act_H(s, act_H(r, x, p), p)
    lhs = vector_sub(lhs_rs.payload, lhs_sr.payload)
    total = tuple(a + b for a, b in zip(r, s))
    if not any(total):
        return not any(lhs)
    rhs = vector_scale(pairing(bar(r), s), act_H(total, x, p).payload)
    return lhs == rhs and lhs_rs.grade == lhs_sr.grade


def check_ham_bracket(p, samples, rng, radius=3):
    report = Report('ham-bracket', params={**p.describe(), 'samples': samples, 'radius': radius})

    def one(case):
        r, s, x, alpha = case
        local = ModuleParams(alpha, p.beta, p.rep)
        return case, verify_ham_bracket(r, s, x, local)

    cases = []
    for _ in range(samples):
        r = random_lattice_vector(rng, p.N, radius, nonzero=True)
        s = random_lattice_vector(rng, p.N, radius, nonzero=True)
        grade = random_lattice_vector(rng, p.N, radius)
        alpha = random_generic_vector(rng, p.N)
        cases.append((r, s, graded(grade, random_payload(rng, p.rep.dim)), alpha))
    for (r, s, x, alpha), outcome in parallel_map(one, cases):
        if outcome is None:
            report.skip({'r': list(r), 's': list(s)})
            continue
        report.record(outcome, {'r': list(r), 's': list(s), 'alpha': list(alpha), **x.to_dict()})
    return report


def check_d_eigenvalues(p, samples, rng, radius=3):
    report = Report('d-eigenvalues', params={**p.describe(), 'samples': samples})
    for _ in range(samples):
        x = graded(random_lattice_vector(rng, p.N, radius), random_payload(rng, p.rep.dim))
        for i in range(1, p.N + 1):
            expected = vector_scale(x.grade[i - 1] + p.beta[i - 1], x.payload)
            report.record(act_d(i, x, p).payload == expected, {'i': i, **x.to_dict()})
    return report


def verify_jet_compatibility(p, samples, rng, radius=3):
    """[H_r, t^m] = (r̄, m) t^(r+m) and [d_i, t^m] = m_i t^m on samples."""
    report = Report('jet-compatibility', params={**p.describe(), 'samples': samples})
    for _ in range(samples):
        r = random_lattice_vector(rng, p.N, radius, nonzero=True)
        m = random_lattice_vector(rng, p.N, radius)
        x = graded(random_lattice_vector(rng, p.N, radius), random_payload(rng, p.rep.dim))
        lhs = vector_sub(act_H(r, act_A(m, x), p).payload, act_A(m, act_H(r, x, p)).payload)
        rhs = vector_scale(pairing(bar(r), m), x.payload)
        report.record(lhs == rhs, {'r': list(r), 'm': list(m), **x.to_dict()})
        i = rng.randint(1, p.N)
        lhs = vector_sub(act_d(i, act_A(m, x), p).payload, act_A(m, act_d(i, x, p)).payload)
        report.record(lhs == vector_scale(m[i - 1], x.payload), {'i': i, 'm': list(m), **x.to_dict()})
    return report


def polynomial_ring(N):
    names = ','.join(f's{i}' for i in range(1, N + 1))
    R, *gens = ring(names, QQ)
    return R, gens


@dataclass(frozen=True)
class MatrixPolynomial:
    """Sum of exponent-tuple monomials in s_1..s_N with End(V) coefficients."""

    nvars: int
    dim: int
    terms: dict
    degree_bound: int

    @classmethod
    def from_operator_terms(cls, nvars, dim, operator_terms, degree_bound):
        """Collect [(scalar polynomial, matrix), ...] by monomial."""
        collected = {}
        for poly, matrix in operator_terms:
            if matrix.is_zero():
                continue
            for monom, c in poly.items():
                if not c:
                    continue
                term = matrix.scale(c)
                collected[monom] = collected[monom] + term if monom in collected else term
        terms = {m: t for m, t in collected.items() if not t.is_zero()}
        return cls(nvars, dim, terms, degree_bound)

    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), SparseMatrix.zeros(self.dim, self.dim))

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def evaluate(self, point):
        point = as_vector(point)
        total = SparseMatrix.zeros(self.dim, self.dim)
        for monom, matrix in self.terms.items():
            value = reduce(lambda acc, pair: acc * pair[0] ** pair[1], zip(point, monom), as_scalar(1))
            if value:
                total = total + matrix.scale(value)
        return total


def _eq1_operator(u, shift, p, R):
    """(ū, shift) I + rho(u ū^t) with polynomial entries, as [(poly, matrix)]."""
    u_bar = bar(u)
    scalar = R(0)
    for a, b in zip(u_bar, shift):
        scalar += a * b
    terms = [(scalar, SparseMatrix.identity(p.rep.dim))]
    for label, coeff in p.rep.alg.outer_bar_coefficients(u).items():
        if coeff:
            terms.append((coeff, p.rep.rho(label)))
    return terms


def _compose(left, right):
    return [(a * b, A @ B) for a, A in left for b, B in right]


def g1_polynomial(r, p):
    """g1(s) = (s̄, r + alpha) I + rho(s s̄^t)."""
    R, s = polynomial_ring(p.N)
    shift = [R(as_scalar(c)) for c in vector_add(r, p.alpha)]
    return MatrixPolynomial.from_operator_terms(p.N, p.rep.dim, _eq1_operator(s, shift, p, R), 2)


def g2_polynomial(r, k, p):
    """g2(s) = [(r̄ - s̄, k + s + alpha) I + rho((r-s)(r̄-s̄)^t)] [(s̄, k + alpha) I + rho(s s̄^t)]."""
    R, s = polynomial_ring(p.N)
    r = [R(as_scalar(c)) for c in r]
    base = [R(as_scalar(c)) for c in vector_add(k, p.alpha)]
    left = _eq1_operator([a - b for a, b in zip(r, s)], [a + b for a, b in zip(base, s)], p, R)
    right = _eq1_operator(s, base, p, R)
    return MatrixPolynomial.from_operator_terms(p.N, p.rep.dim, _compose(left, right), 4)


def monomial(N, powers):
    """Exponent tuple from {1-based variable index: power}."""
    exps = [0] * N
    for index, power in powers.items():
        exps[index - 1] += power
    return tuple(exps)


def _eps(n, coeffs):
    return tuple(coeffs.get(a, 0) for a in range(1, n + 1))


def _root_matrix(p, coeffs):
    return p.rep.rho(p.rep.alg.root_vector(_eps(p.n, coeffs)).label)


def g1_expected_terms(p, r):
    """The displayed basis expansion of g1: monomial -> expected coefficient operator."""
    n, N, dim = p.n, p.N, p.rep.dim
    half = as_scalar('1/2')
    identity = SparseMatrix.identity(dim)
    shift = vector_add(r, p.alpha)
    expected = {monomial(N, {}): SparseMatrix.zeros(dim, dim)}
    for a in range(1, n + 1):
        expected[monomial(N, {n + a: 1})] = identity.scale(shift[a - 1])
        expected[monomial(N, {a: 1})] = identity.scale(-shift[n + a - 1])
        expected[monomial(N, {a: 1, n + a: 1})] = p.rep.rho(f'h{a}')
        expected[monomial(N, {n + a: 2})] = _root_matrix(p, {a: -2}).scale(half)
        expected[monomial(N, {a: 2})] = _root_matrix(p, {a: 2}).scale(-half)
    for b in range(1, n + 1):
        for c in range(1, n + 1):
            if b != c:
                expected[monomial(N, {b: 1, n + c: 1})] = _root_matrix(p, {b: 1, c: -1})
    for d in range(1, n + 1):
        for e in range(d + 1, n + 1):
            expected[monomial(N, {n + d: 1, n + e: 1})] = _root_matrix(p, {d: -1, e: -1})
            expected[monomial(N, {d: 1, e: 1})] = -_root_matrix(p, {d: 1, e: 1})
    return expected


def verify_g1_expansion(p, r):
    report = Report('g1-expansion', params={**p.describe(), 'r': list(r)})
    poly = g1_polynomial(r, p)
    expected = g1_expected_terms(p, r)
    for monom in sorted(set(expected) | set(poly.terms)):
        want = expected.get(monom, SparseMatrix.zeros(p.rep.dim, p.rep.dim))
        report.record(poly.coefficient(monom) == want, {'monomial': list(monom)})
    report.details['degree'] = poly.degree()
    return report


def verify_g1_evaluation(p, r, samples, rng, radius=3):
    """g1(s) equals the operator of H_s at grade r - s."""
    report = Report('g1-evaluation', params={**p.describe(), 'r': list(r), 'samples': samples})
    poly = g1_polynomial(r, p)
    for _ in range(samples):
        s = random_lattice_vector(rng, p.N, radius)
        grade = tuple(a - b for a, b in zip(r, s))
        report.record(poly.evaluate(s) == coefficient_matrix(s, grade, p), {'s': list(s)})
    return report


def verify_g2_evaluation(p, samples, rng, radius=3):
    """g2(s) equals H_{r-s} after H_s at grade k."""
    report = Report('g2-evaluation', params={**p.describe(), 'samples': samples})
    for _ in range(samples):
        r = random_lattice_vector(rng, p.N, radius)
        k = random_lattice_vector(rng, p.N, radius)
        poly = g2_polynomial(r, k, p)
        for _ in range(3):
            s = random_lattice_vector(rng, p.N, radius)
            first = coefficient_matrix(s, k, p)
            second = coefficient_matrix(tuple(a - b for a, b in zip(r, s)), tuple(a + b for a, b in zip(k, s)), p)
            report.record(poly.evaluate(s) == second @ first, {'r': list(r), 'k': list(k), 's': list(s)})
    return report


def g2_table(p):
    """Degree-4 table rows: (row name, index pair, monomial, expected operator)."""
    n, N = p.n, p.N
    half, quarter = as_scalar('1/2'), as_scalar('1/4')

    def X(coeffs):
        return _root_matrix(p, coeffs)

    rows = []
    for i in range(1, n + 1):
        rows.append(('s_i^4', (i,), monomial(N, {i: 4}), (X({i: 2}) @ X({i: 2})).scale(quarter)))
        rows.append(('s_{n+i}^4', (i,), monomial(N, {n + i: 4}), (X({i: -2}) @ X({i: -2})).scale(quarter)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            plus = X({i: 1, j: 1})
            rows.append(('s_i^2 s_j^2', (i, j), monomial(N, {i: 2, j: 2}),
                         plus @ plus + (X({i: 2}) @ X({j: 2})).scale(half)))
            minus = X({i: -1, j: -1})
            rows.append(('s_{n+i}^2 s_{n+j}^2', (i, j), monomial(N, {n + i: 2, n + j: 2}),
                         minus @ minus + (X({j: -2}) @ X({i: -2})).scale(half)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            short = X({i: 1, j: -1})
            rows.append(('s_i^2 s_{n+j}^2', (i, j), monomial(N, {i: 2, n + j: 2}),
                         short @ short - (X({j: -2}) @ X({i: 2})).scale(half)))
            rows.append(('s_i^3 s_{n+j}', (i, j), monomial(N, {i: 3, n + j: 1}),
                         -(short @ X({i: 2}))))
    return rows


def verify_g2_table(p, r=None, k=None):
    r = tuple(r) if r is not None else tuple(range(1, p.N + 1))
    k = tuple(k) if k is not None else (0,) * p.N
    report = Report('g2-table', params={**p.describe(), 'r': list(r), 'k': list(k)})
    poly = g2_polynomial(r, k, p)
    per_row = {}
    for name, indices, monom, expected in g2_table(p):
        passed = poly.coefficient(monom) == expected
        report.record(passed, {'row': name, 'indices': list(indices), 'monomial': list(monom)})
        tally = per_row.setdefault(name, {'passes': 0, 'failures': 0})
        tally['passes' if passed else 'failures'] += 1
    if p.n == 1:
        report.notes.append('two-index rows are vacuous for n = 1')
    report.details['rows'] = per_row
    report.details['degree'] = poly.degree()
    return report


def named_action_expected(item, indices, x, p):
    """Right-hand sides of the three listed actions, payload only."""
    n, k, v = p.n, x.grade, x.payload
    half = as_scalar('1/2')
    alpha = p.alpha
    if item == 1:
        (i,) = indices
        c = -(k[n + i - 1] + alpha[n + i - 1])
        return vector_add(vector_scale(c, v), vector_scale(-half, _root_matrix(p, {i: 2}).apply(v)))
    if item == 2:
        (i,) = indices
        c = k[i - 1] + alpha[i - 1]
        return vector_add(vector_scale(c, v), vector_scale(half, _root_matrix(p, {i: -2}).apply(v)))
    i, j = indices
    c = k[j - 1] + alpha[j - 1] - k[n + i - 1] - alpha[n + i - 1]
    out = vector_scale(c, v)
    out = vector_add(out, _root_matrix(p, {i: 1, j: -1}).apply(v))
    out = vector_add(out, vector_scale(half, _root_matrix(p, {j: -2}).apply(v)))
    return vector_add(out, vector_scale(-half, _root_matrix(p, {i: 2}).apply(v)))


def _named_generator(item, indices, n):
    r = [0] * (2 * n)
    if item == 1:
        r[indices[0] - 1] = 1
    elif item == 2:
        r[n + indices[0] - 1] = 1
    else:
        r[indices[0] - 1] = 1
        r[n + indices[1] - 1] = 1
    return tuple(r)


def verify_named_actions(p, samples, rng, radius=3):
    report = Report('named-actions', params={**p.describe(), 'samples': samples})
    n = p.n
    cases = [(1, (i,)) for i in range(1, n + 1)] + [(2, (i,)) for i in range(1, n + 1)]
    cases += [(3, (i, j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for _ in range(samples):
        x = graded(random_lattice_vector(rng, p.N, radius), random_payload(rng, p.rep.dim))
        for item, indices in cases:
            r = _named_generator(item, indices, n)
            got = act_H(r, x, p)
            expected = named_action_expected(item, indices, x, p)
            passed = got.payload == expected and got.grade == tuple(a + b for a, b in zip(x.grade, r))
            report.record(passed, {'item': item, 'indices': list(indices), **x.to_dict()})
    return report


def verify_shift_isomorphism(gamma, p, samples, rng, radius=3):
    """v (x) t^r -> v (x) t^(r - gamma) intertwines (alpha, beta) with (alpha + gamma, beta + gamma)."""
    gamma = tuple(int(g) for g in gamma)
    target = p.shifted(gamma)
    report = Report('shift-isomorphism', params={**p.describe(), 'gamma': list(gamma), 'samples': samples})

    def phi(x):
        return GradedVector(tuple(a - b for a, b in zip(x.grade, gamma)), x.payload)

    for _ in range(samples):
        x = graded(random_lattice_vector(rng, p.N, radius), random_payload(rng, p.rep.dim))
        r = random_lattice_vector(rng, p.N, radius, nonzero=True)
        report.record(phi(act_H(r, x, p)) == act_H(r, phi(x), target), {'generator': 'H', 'r': list(r), **x.to_dict()})
        i = rng.randint(1, p.N)
        report.record(phi(act_d(i, x, p)) == act_d(i, phi(x), target), {'generator': 'd', 'i': i, **x.to_dict()})
    return report
