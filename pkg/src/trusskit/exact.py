"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`. Vectors are tuples of fractions and
matrices are :class:`RMat` instances (row-major, immutable, with an explicit
column count so that 0-row matrices still know their width).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rat = Fraction
RVec = tuple  # tuple[Fraction, ...]

_RAT_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def parse_rat(value) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or an int into a Fraction.

    Decimal strings and floats are rejected: every quantity in this package is
    exact, and a silently rounded float would break that.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")  # noqa: TRY004  one error type for all bad input
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and _RAT_RE.match(value):
        num, _, den = value.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise ValueError(f"not a rational string (expected 'p/q' or 'n'): {value!r}")


def format_rat(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(entries: Iterable) -> RVec:
    return tuple(Fraction(x) if not isinstance(x, str) else parse_rat(x) for x in entries)


def zero_vec(n: int) -> RVec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> RVec:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> RVec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> RVec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> RVec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> RVec:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                out[k] += c * a
    return tuple(out)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class RMat:
    """Dense immutable rational matrix."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"ragged matrix: row of length {len(r)}, expected {self.ncols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> RMat:
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> RMat:
        cols = [vec(c) for c in cols]
        if nrows is None:
            if not cols:
                raise ValueError("nrows is required for a matrix with no columns")
            nrows = len(cols[0])
        return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def identity(cls, n: int) -> RMat:
        return cls(tuple(unit_vec(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, m: int, n: int) -> RMat:
        return cls(tuple(zero_vec(n) for _ in range(m)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> RVec:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[RVec]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> RMat:
        return RMat(tuple(self.columns()), self.nrows)

    def __matmul__(self, other):
        if isinstance(other, RMat):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
            cols = other.columns()
            return RMat(tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)
        if len(other) != self.ncols:
            raise ValueError(f"shape mismatch: {self.shape} @ vector of length {len(other)}")
        return tuple(dot(r, other) for r in self.rows)

    def __add__(self, other: RMat) -> RMat:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return RMat(tuple(add(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __mul__(self, c) -> RMat:
        return RMat(tuple(scale(c, r) for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def vstack(self, other: RMat) -> RMat:
        if self.ncols != other.ncols:
            raise ValueError(f"column mismatch: {self.ncols} vs {other.ncols}")
        return RMat(self.rows + other.rows, self.ncols)

    def hstack(self, other: RMat) -> RMat:
        if self.nrows != other.nrows:
            raise ValueError(f"row mismatch: {self.nrows} vs {other.nrows}")
        return RMat(tuple(a + b for a, b in zip(self.rows, other.rows)), self.ncols + other.ncols)

    def select_rows(self, idx: Iterable[int]) -> RMat:
        return RMat(tuple(self.rows[i] for i in idx), self.ncols)

    def select_columns(self, idx: Sequence[int]) -> RMat:
        return RMat(tuple(tuple(r[j] for j in idx) for r in self.rows), len(idx))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.T

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def rref(M: RMat) -> tuple[RMat, list[int], int]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Pivots on the first nonzero entry of each column. Returns ``(R, pivots,
    rank)``; zero rows are kept at the bottom so ``R`` has the shape of ``M``.
    """
    A = [list(r) for r in M.rows]
    m, n = M.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        p = next((i for i in range(row, m) if A[i][col] != 0), None)
        if p is None:
            continue
        A[row], A[p] = A[p], A[row]
        piv = A[row][col]
        if piv != 1:
            A[row] = [x / piv for x in A[row]]
        prow = A[row]
        for i in range(m):
            if i != row:
                f = A[i][col]
                if f:
                    A[i] = [a - f * b for a, b in zip(A[i], prow)]
        pivots.append(col)
        row += 1
    return RMat(tuple(tuple(r) for r in A), n), pivots, len(pivots)


def rank(M: RMat) -> int:
    return rref(M)[2]


def rank_of(vectors: Sequence[Sequence], n: int) -> int:
    return rank(RMat.from_rows(vectors, n))


def null_space_basis(M: RMat) -> list[RVec]:
    R, pivots, _ = rref(M)
    n = M.ncols
    pivset = set(pivots)
    basis = []
    for f in (j for j in range(n) if j not in pivset):
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R.rows[i][f]
        basis.append(tuple(v))
    return basis


class Subspace:
    """Linear subspace of Q^n given by an independent basis.

    The basis handed in is kept in order (callers rely on that to interpret
    coefficients); equality and hashing go through the canonical RREF basis.
    """

    __slots__ = ("_canon", "ambient", "basis")

    def __init__(self, basis: Iterable[Sequence], ambient: int):
        self.ambient = ambient
        self.basis = tuple(vec(b) for b in basis)
        for b in self.basis:
            if len(b) != ambient:
                raise ValueError(f"basis vector of length {len(b)} in Q^{ambient}")
        self._canon = None
        if self.basis and rank_of(self.basis, ambient) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> Subspace:
        """Subspace spanned by arbitrary (possibly dependent) vectors.

        Keeps the first maximal independent subsequence of ``vectors``.
        """
        chosen: list[RVec] = []
        for v in vectors:
            v = vec(v)
            if is_zero(v):
                continue
            if rank_of(chosen + [v], ambient) > len(chosen):
                chosen.append(v)
        return cls(chosen, ambient)

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls((), ambient)

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls((unit_vec(ambient, i) for i in range(ambient)), ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def canonical(self) -> tuple:
        if self._canon is None:
            if not self.basis:
                self._canon = ()
            else:
                R, _, r = rref(RMat(self.basis, self.ambient))
                self._canon = R.rows[:r]
        return self._canon

    def __contains__(self, v) -> bool:
        v = vec(v)
        if len(v) != self.ambient:
            raise ValueError(f"vector of length {len(v)} tested against Q^{self.ambient}")
        if is_zero(v):
            return True
        return rank_of(self.basis + (v,), self.ambient) == self.dim

    def contains_subspace(self, other: Subspace) -> bool:
        return all(b in self for b in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.ambient, self.canonical()))

    def coordinates(self, v: Sequence) -> RVec:
        """Coefficients of ``v`` in this basis; ValueError if ``v`` is outside."""
        v = vec(v)
        if not self.basis:
            if not is_zero(v):
                raise ValueError("vector not in subspace")
            return ()
        A = RMat.from_columns(self.basis, self.ambient)
        sol = solve_particular(A, v)
        if sol is None:
            raise ValueError("vector not in subspace")
        return sol

    def complement(self) -> Subspace:
        return orthogonal_complement(self.basis, self.ambient)

    def project_out(self, v: Sequence) -> RVec:
        """Orthogonal projection of ``v`` onto the complement of this subspace."""
        v = vec(v)
        if not self.basis:
            return v
        B = RMat(self.basis, self.ambient)
        G = B @ B.T
        coeffs = solve_particular(G, B @ v)
        return sub(v, lin_comb(coeffs, self.basis, self.ambient))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def null_space(M: RMat) -> Subspace:
    return Subspace(null_space_basis(M), M.ncols)


def orthogonal_complement(vectors: Iterable[Sequence], ambient: int) -> Subspace:
    """All x with v . x = 0 for every input v; Q^n for an empty input."""
    return null_space(RMat.from_rows(vectors, ambient))


def solve_particular(A: RMat, b: Sequence) -> RVec | None:
    """One solution of ``A x = b`` with free variables set to zero, or None."""
    m, n = A.shape
    b = vec(b)
    if len(b) != m:
        raise ValueError(f"rhs of length {len(b)} for {m} equations")
    R, pivots, _ = rref(A.hstack(RMat(tuple((x,) for x in b), 1)))
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = R.rows[i][n]
    return tuple(x)


def primitive_integer(v: Sequence) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd; sign is preserved."""
    v = vec(v)
    if is_zero(v):
        raise ValueError("zero vector has no primitive direction")
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(a // g for a in ints)
