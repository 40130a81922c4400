"""Exact rational scalars and dense linear algebra over Q.

Everything downstream computes with fractions.Fraction: arbitrary precision,
always stored normalized with a positive denominator, which is exactly the
invariant the rest of the package relies on.  Matrices are dense and small
(the largest systems are a few hundred unknowns from the lift solvers), so
plain Gauss-Jordan elimination is used, with a deterministic pivot rule:
the first nonzero entry in scan order.  No floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the exact rational text syntax: "7", "-3/2", "0".

    A unicode minus sign is tolerated on input; decimal points and exponents
    are rejected (no floats anywhere in this package).
    """
    s = str(text).strip().replace("−", "-")
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# vectors: plain lists of Fraction

def as_vector(xs) -> list:
    return [Fraction(x) for x in xs]


def vzero(n: int) -> list:
    return [ZERO] * n


def vadd(u, v) -> list:
    return [a + b for a, b in zip(u, v)]


def vsub(u, v) -> list:
    return [a - b for a, b in zip(u, v)]


def vscale(c, u) -> list:
    c = Fraction(c)
    return [c * a for a in u]


def is_zero_vector(u) -> bool:
    return all(a == 0 for a in u)


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        ents = tuple(Fraction(x) for r in rows for x in r)
        return Matrix(len(rows), cols, ents)

    @staticmethod
    def from_columns(columns: Sequence[Sequence]) -> "Matrix":
        cols = [list(c) for c in columns]
        if not cols:
            return Matrix(0, 0, ())
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ValueError("ragged columns")
        return Matrix.from_rows([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, tuple([ZERO] * (rows * cols)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        ents = [ZERO] * (n * n)
        for i in range(n):
            ents[i * n + i] = ONE
        return Matrix(n, n, tuple(ents))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def mul_vec(self, x) -> list:
        if len(x) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(sum((self.entries[base + j] * x[j] for j in range(self.cols)), ZERO))
        return out


def _rref(work: list, limit: int) -> list:
    """In-place reduced row echelon form over columns [0, limit).

    Pivot choice is the first nonzero entry scanning rows top-down within the
    leftmost eligible column, so the result is deterministic.  Returns the
    list of pivot columns.
    """
    pivots = []
    r = 0
    m = len(work)
    for c in range(limit):
        prow = None
        for i in range(r, m):
            if work[i][c] != 0:
                prow = i
                break
        if prow is None:
            continue
        work[r], work[prow] = work[prow], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        lead = work[r]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], lead)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def _kernel_from_rref(work: list, pivots: list, cols: int) -> list:
    pivset = set(pivots)
    basis = []
    for fc in range(cols):
        if fc in pivset:
            continue
        v = vzero(cols)
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -work[r][fc]
        basis.append(v)
    return basis


@dataclass
class LinearSolution:
    """Outcome of an exact linear solve: particular solution plus kernel basis.

    particular is None exactly when the system is infeasible
    (rank [A|b] > rank A).
    """

    particular: Optional[list]
    kernel: list
    rank: int

    @property
    def infeasible(self) -> bool:
        return self.particular is None


def solve_linear(a: Matrix, b: Sequence) -> LinearSolution:
    if a.rows != len(b):
        raise ValueError(f"dimension mismatch: {a.rows} rows vs {len(b)} right-hand entries")
    work = [a.row(i) + [Fraction(b[i])] for i in range(a.rows)]
    pivots = _rref(work, a.cols)
    rk = len(pivots)
    kernel = _kernel_from_rref(work, pivots, a.cols)
    for r in range(rk, a.rows):
        if work[r][a.cols] != 0:
            return LinearSolution(None, kernel, rk)
    x = vzero(a.cols)
    for r, pc in enumerate(pivots):
        x[pc] = work[r][a.cols]
    return LinearSolution(x, kernel, rk)


def kernel_basis(a: Matrix) -> list:
    work = a.to_rows()
    pivots = _rref(work, a.cols)
    return _kernel_from_rref(work, pivots, a.cols)


def rank(a: Matrix) -> int:
    work = a.to_rows()
    return len(_rref(work, a.cols))


def invert(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise ValueError("only square matrices can be inverted")
    n = a.rows
    eye = Matrix.identity(n)
    work = [a.row(i) + eye.row(i) for i in range(n)]
    pivots = _rref(work, n)
    if len(pivots) < n:
        raise ValueError("matrix is singular")
    return Matrix.from_rows([work[i][n:] for i in range(n)])


def echelon_basis(vectors: Sequence[Sequence], dim: int) -> list:
    """Reduce a generating set to an echelonized independent basis."""
    rows = [as_vector(v) for v in vectors if not is_zero_vector(v)]
    for v in rows:
        if len(v) != dim:
            raise ValueError("vector length does not match ambient dimension")
    if not rows:
        return []
    pivots = _rref(rows, dim)
    return rows[:len(pivots)]
