# shenlarsson/linalg.py

"""
Exact rational linear algebra.

Scalars are elements of sympy's ``QQ`` domain, vectors are tuples of them,
matrices wrap a sparse ``DomainMatrix``. Subspaces are always held in
reduced row-echelon form so that equal subspaces compare equal.
"""
import logging
from bisect import bisect
from dataclasses import dataclass
from functools import cached_property

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import DimensionMismatch

logger = logging.getLogger(__name__)

ZERO = QQ(0)
ONE = QQ(1)

# rref below this size goes through the dense representation
DENSE_CUTOFF = 64


def as_scalar(value):
    """Exact rational from an int, a Fraction-like, a "p/q" string or a QQ element."""
    if isinstance(value, bool):
        raise TypeError('booleans are not scalars')
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        text = value.strip()
        if '/' in text:
            numerator, denominator = text.split('/', 1)
            return QQ(int(numerator), int(denominator))
        return QQ(int(text))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError(f'cannot read {value!r} as an exact rational')


def format_scalar(value):
    value = as_scalar(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f'{numerator}/{denominator}'


def as_vector(values):
    return tuple(as_scalar(v) for v in values)


def unit_vector(dim, index):
    return tuple(ONE if i == index else ZERO for i in range(dim))


def vector_add(u, v):
    _check_lengths(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vector_sub(u, v):
    _check_lengths(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vector_scale(c, v):
    c = as_scalar(c)
    return tuple(c * a for a in v)


def _check_lengths(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f'vector lengths differ: {len(u)} != {len(v)}')


class SparseMatrix:
    """Immutable exact rational matrix; zero entries are never stored."""

    def __init__(self, dm):
        self._dm = dm.to_sparse()

    @classmethod
    def from_entries(cls, rows, cols, entries):
        data = {}
        for (i, j), value in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatch(f'entry ({i}, {j}) outside a {rows}x{cols} matrix')
            value = as_scalar(value)
            if value:
                data.setdefault(i, {})[j] = value
        return cls(DomainMatrix(data, (rows, cols), QQ))

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [as_vector(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatch(f'row {i} has length {len(row)}, expected {cols}')
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = value
        return cls.from_entries(len(rows), cols, entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(DomainMatrix({}, (rows, cols), QQ))

    @classmethod
    def identity(cls, n):
        return cls(DomainMatrix({i: {i: ONE} for i in range(n)}, (n, n), QQ))

    @property
    def shape(self):
        return self._dm.shape

    @property
    def rows(self):
        return self._dm.shape[0]

    @property
    def cols(self):
        return self._dm.shape[1]

    @cached_property
    def row_dicts(self):
        """{row: {col: value}} with zeros dropped."""
        rows = {}
        for i, row in self._dm.rep.items():
            kept = {j: v for j, v in row.items() if v}
            if kept:
                rows[i] = kept
        return rows

    def entries(self):
        return {(i, j): v for i, row in sorted(self.row_dicts.items()) for j, v in sorted(row.items())}

    def get(self, i, j):
        return self.row_dicts.get(i, {}).get(j, ZERO)

    def nnz(self):
        return sum(len(row) for row in self.row_dicts.values())

    def is_zero(self):
        return not self.row_dicts

    def to_rows(self):
        return [tuple(self.get(i, j) for j in range(self.cols)) for i in range(self.rows)]

    def apply(self, vector):
        """Matrix times column vector, as a tuple."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f'cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(vector)}')
        out = [ZERO] * self.rows
        for i, row in self.row_dicts.items():
            acc = ZERO
            for j, v in row.items():
                x = vector[j]
                if x:
                    acc += v * x
            out[i] = acc
        return tuple(out)

    def transpose(self):
        return SparseMatrix(self._dm.transpose())

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return SparseMatrix.zeros(self.rows, self.cols)
        return SparseMatrix(self._dm * c)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f'cannot multiply {self.shape} by {other.shape}')
        return SparseMatrix(self._dm.matmul(other._dm))

    def __add__(self, other):
        self._check_same_shape(other)
        return SparseMatrix(self._dm + other._dm)

    def __sub__(self, other):
        self._check_same_shape(other)
        return SparseMatrix(self._dm - other._dm)

    def __neg__(self):
        return SparseMatrix(-self._dm)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.row_dicts == other.row_dicts

    def __hash__(self):
        return hash((self.shape, tuple(self.entries().items())))

    def __repr__(self):
        entries = ', '.join(f'({i},{j}): {format_scalar(v)}' for (i, j), v in self.entries().items())
        return f'SparseMatrix({self.rows}x{self.cols}, {{{entries}}})'

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f'shapes differ: {self.shape} != {other.shape}')

    @property
    def domain_matrix(self):
        return self._dm


def _rref_dm(dm):
    if max(dm.shape) < DENSE_CUTOFF:
        reduced, pivots = dm.to_dense().rref()
    else:
        reduced, pivots = dm.rref()
    return reduced.to_sparse(), tuple(pivots)


def rref(m):
    """Reduced row-echelon form of ``m`` and its rank."""
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return SparseMatrix.zeros(m.rows, m.cols), 0
    reduced, pivots = _rref_dm(m.domain_matrix)
    return SparseMatrix(reduced), len(pivots)


def rank(m):
    return rref(m)[1]


def nullspace(m):
    """Canonical basis of {v : m v = 0}."""
    reduced, r = rref(m)
    rows = reduced.row_dicts
    pivot_of_row = {}
    for i in range(r):
        pivot_of_row[i] = min(rows[i])
    pivots = set(pivot_of_row.values())
    vectors = []
    for free in range(m.cols):
        if free in pivots:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for i, p in pivot_of_row.items():
            value = rows[i].get(free)
            if value:
                v[p] = -value
        vectors.append(tuple(v))
    return Subspace.span(m.cols, vectors)


@dataclass(frozen=True)
class Subspace:
    """A subspace of QQ^ambient_dim held by its RREF basis."""

    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, ambient_dim, vectors):
        vectors = [tuple(v) for v in vectors if any(v)]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f'vector of length {len(v)} in a space of dimension {ambient_dim}')
        if not vectors:
            return cls.zero(ambient_dim)
        reduced, r = rref(SparseMatrix.from_rows(vectors, ambient_dim))
        rows = reduced.row_dicts
        basis = []
        pivots = []
        for i in range(r):
            row = rows[i]
            pivots.append(min(row))
            basis.append(tuple(row.get(j, ZERO) for j in range(ambient_dim)))
        return cls(ambient_dim, tuple(basis), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        basis = tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim))
        return cls(ambient_dim, basis, tuple(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.dim == self.ambient_dim

    @cached_property
    def _sparse_rows(self):
        return [[(j, x) for j, x in enumerate(row) if x] for row in self.basis]

    def reduce(self, vector):
        """Residue of ``vector`` after elimination by the basis; zero iff contained."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(f'vector of length {len(vector)} in a space of dimension {self.ambient_dim}')
        residue = list(vector)
        for row, p in zip(self._sparse_rows, self.pivots):
            c = residue[p]
            if c:
                for j, x in row:
                    residue[j] -= c * x
        return tuple(residue)

    def contains(self, vector):
        return not any(self.reduce(vector))

    def coordinates(self, vector):
        """Coordinates of a member vector relative to the RREF basis."""
        if not self.contains(vector):
            raise DimensionMismatch('vector does not lie in the subspace')
        return tuple(vector[p] for p in self.pivots)

    def extend(self, vectors):
        return self.adjoin(vectors)[0]

    def adjoin(self, vectors):
        """Add ``vectors`` by elimination against the current RREF rows.

        Returns the enlarged subspace and the normalized residues that enlarged it, in order.
        """
        basis = [list(row) for row in self.basis]
        pivots = list(self.pivots)
        added = []
        for vector in vectors:
            if len(vector) != self.ambient_dim:
                raise DimensionMismatch(f'vector of length {len(vector)} in a space of dimension {self.ambient_dim}')
            residue = list(vector)
            for row, p in zip(basis, pivots):
                c = residue[p]
                if c:
                    residue = [a - c * b for a, b in zip(residue, row)]
            lead = next((j for j, x in enumerate(residue) if x), None)
            if lead is None:
                continue
            scale = ONE / residue[lead]
            residue = [x * scale for x in residue]
            for row in basis:
                c = row[lead]
                if c:
                    row[:] = [a - c * b for a, b in zip(row, residue)]
            position = bisect(pivots, lead)
            basis.insert(position, residue)
            pivots.insert(position, lead)
            added.append(tuple(residue))
        if not added:
            return self, ()
        return Subspace(self.ambient_dim, tuple(tuple(row) for row in basis), tuple(pivots)), tuple(added)

    def sum(self, other):
        self._check_ambient(other)
        return self.extend(other.basis)

    def annihilator(self):
        """{x : (b, x) = 0 for every basis vector b} for the standard dot product."""
        if self.is_zero():
            return Subspace.full(self.ambient_dim)
        return nullspace(self.as_matrix())

    def intersect(self, other):
        self._check_ambient(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        if self.is_full():
            return other
        if other.is_full():
            return self
        constraints = self.annihilator().sum(other.annihilator())
        return constraints.annihilator()

    def issubspace(self, other):
        self._check_ambient(other)
        return all(other.contains(v) for v in self.basis)

    def as_matrix(self):
        return SparseMatrix.from_rows(self.basis, self.ambient_dim)

    def _check_ambient(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f'ambient dimensions differ: {self.ambient_dim} != {other.ambient_dim}')


def intersect(a, b):
    return a.intersect(b)


def contains(s, vector):
    return s.contains(vector)
