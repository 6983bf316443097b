"""Exact linear algebra over the rationals.

Every cohomology dimension, kernel, and equivalence witness in this package
reduces to rank / kernel / solve on dense matrices with ``Fraction`` entries.
This module is therefore deliberately small and boring: plain exact Gaussian
elimination, no floating point anywhere, and results that the contract cares
about (solutions, kernel vectors) are re-verified by exact multiplication
before they are returned.

``Matrix`` doubles as a container for entries from other commutative rings
(polynomials in a deformation parameter, see :mod:`assoc2.poly`); only the
elimination routines insist on ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Vector = tuple  # tuple of scalars (Fraction in the exact-linear-algebra API)

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or "p") with the sign on the numerator."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        d = int(den)
        if d <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coerce(x):
    return Fraction(x) if isinstance(x, int) else x


class Matrix:
    """Dense row-major matrix. Immutable once constructed."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        rows = tuple(tuple(_coerce(x) for x in row) for row in entries)
        self.rows = len(rows)
        if rows:
            self.cols = len(rows[0])
            if any(len(r) != self.cols for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != self.cols:
                raise ValueError("declared column count does not match rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.cols = cols
        self.entries = rows

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @staticmethod
    def from_cols(cols, rows: int) -> "Matrix":
        cols = list(cols)
        return Matrix(tuple(tuple(_coerce(c[i]) for c in cols) for i in range(rows)), len(cols))

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(self.col(j) for j in range(self.cols)), self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.cols
            out = []
            for row in self.entries:
                new = [0] * cols
                for k, x in enumerate(row):
                    if x == 0:
                        continue
                    orow = other.entries[k]
                    for j in range(cols):
                        new[j] = new[j] + x * orow[j]
                out.append(tuple(ZERO + v if isinstance(v, int) else v for v in new))
            return Matrix(tuple(out), cols)
        # matrix @ vector
        v = tuple(other)
        if self.cols != len(v):
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(v)}")
        out = []
        for row in self.entries:
            acc = 0
            for x, y in zip(row, v):
                if x == 0 or y == 0:
                    continue
                acc = acc + x * y
            out.append(ZERO + acc if isinstance(acc, int) else acc)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.entries), self.cols)

    def scale(self, c) -> "Matrix":
        return Matrix(tuple(tuple(c * a for a in r) for r in self.entries), self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"Matrix({self.entries!r})"

    # -- elimination ---------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = ONE / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(tuple(tuple(row) for row in m), self.cols), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace given by an explicit (verified independent) basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector has wrong length")
        if self.basis:
            if rank(Matrix(self.basis, self.ambient_dim)) != len(self.basis):
                raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        return in_span(self, v)


def rank(m: Matrix) -> int:
    """Rank over the rationals, computed exactly."""
    return len(m.rref()[1])


def kernel_basis(m: Matrix) -> Subspace:
    """A basis of ``{v : m v = 0}``; each vector is re-checked exactly."""
    red, pivots = m.rref()
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red.entries[i][f]
        vec = tuple(v)
        if any(x != 0 for x in m @ vec):
            raise AssertionError("kernel vector failed exact re-multiplication")
        basis.append(vec)
    return Subspace(m.cols, tuple(basis))


def solve(m: Matrix, b: Vector):
    """Some ``x`` with ``m x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.  The
    returned vector is verified by exact re-multiplication.
    """
    b = tuple(_coerce(x) for x in b)
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = Matrix(tuple(row + (bv,) for row, bv in zip(m.entries, b)), m.cols + 1) if m.rows else Matrix((), m.cols + 1)
    red, pivots = aug.rref()
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        x[p] = red.entries[i][m.cols]
    xv = tuple(x)
    if (m @ xv) != b:
        raise AssertionError("solution failed exact re-multiplication")
    return xv


def in_span(s: Subspace, v: Vector) -> bool:
    """Whether ``v`` lies in the span of ``s.basis`` (rank comparison)."""
    if len(v) != s.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    if all(x == 0 for x in v):
        return True
    if not s.basis:
        return False
    base = Matrix(s.basis, s.ambient_dim)
    ext = Matrix(s.basis + (tuple(_coerce(x) for x in v),), s.ambient_dim)
    return rank(ext) == rank(base)
