"""Exact linear algebra over the rationals.

Matrices are plain lists of rows whose entries are ``int`` or ``Fraction``.
Every routine first clears denominators row by row and then runs a
fraction-free elimination on integers: a row update is
``row_i <- (p*row_i - a*row_k) / content``, which keeps entries integral and
removes the common factor that plain Bareiss division would remove.  Nothing
here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .errors import ShapeMismatch


def _as_int_row(row) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def ncols_of(M, ncols=None) -> int:
    if ncols is not None:
        return ncols
    if not M:
        raise ShapeMismatch("cannot infer the column count of an empty matrix")
    return len(M[0])


def echelon(M, ncols=None) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form of ``M``.

    Returns the non-zero echelon rows (each primitive) and their pivot columns.
    """
    ncols = ncols_of(M, ncols)
    rows = []
    for r in M:
        if len(r) != ncols:
            raise ShapeMismatch("matrix is not rectangular")
        ir = _as_int_row(r)
        if any(ir):
            rows.append(_primitive(ir))
    pivots: list[int] = []
    k = 0
    for c in range(ncols):
        if k == len(rows):
            break
        piv = None
        for i in range(k, len(rows)):
            v = rows[i][c]
            if v and (piv is None or abs(v) < abs(rows[piv][c])):
                piv = i
                if abs(v) == 1:
                    break
        if piv is None:
            continue
        rows[k], rows[piv] = rows[piv], rows[k]
        prow = rows[k]
        p = prow[c]
        tail = prow[c:]
        keep = []
        for i in range(k + 1, len(rows)):
            ri = rows[i]
            a = ri[c]
            if not a:
                keep.append(ri)
                continue
            g = gcd(p, a)
            mp, ma = p // g, a // g
            new = [mp * x - ma * y for x, y in zip(ri[c:], tail)]
            if any(new):
                keep.append([0] * c + _primitive(new))
        rows[k + 1:] = keep
        pivots.append(c)
        k += 1
    return rows[:k], pivots


def rank(M, ncols=None) -> int:
    if not M:
        return 0
    return len(echelon(M, ncols)[1])


def reduced_echelon(M, ncols=None) -> tuple[list[list[int]], list[int]]:
    """Integer reduced echelon form: each pivot column is zero outside its pivot row."""
    rows, pivots = echelon(M, ncols)
    for k in range(len(rows) - 1, -1, -1):
        c = pivots[k]
        p = rows[k][c]
        for i in range(k):
            a = rows[i][c]
            if a:
                g = gcd(p, a)
                mp, ma = p // g, a // g
                rows[i] = _primitive([mp * x - ma * y for x, y in zip(rows[i], rows[k])])
    return rows, pivots


def kernel_basis(M, ncols=None) -> list[list[int]]:
    """Integer basis of ``{v : M v = 0}``, one primitive vector per free column."""
    ncols = ncols_of(M, ncols)
    if not M:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    rows, pivots = reduced_echelon(M, ncols)
    pivset = set(pivots)
    scale = 1
    for k, c in enumerate(pivots):
        scale = lcm(scale, rows[k][c])
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = scale
        for k, c in enumerate(pivots):
            if rows[k][f]:
                v[c] = -rows[k][f] * (scale // rows[k][c])
        basis.append(_primitive(v))
    return basis


def transpose(M, ncols=None) -> list[list]:
    ncols = ncols_of(M, ncols)
    return [list(col) for col in zip(*M)] if M else [[] for _ in range(ncols)]


def mat_vec(M, v) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def mat_mul(A, B) -> list[list]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


class Span:
    """A linear subspace of ``Q^ncols`` given by spanning rows or by its annihilator.

    Whichever description was not supplied is computed on first access.  As a
    projective space the subspace has dimension ``rank - 1``.
    """

    def __init__(self, ncols: int, rows=None, annihilator=None):
        if rows is None and annihilator is None:
            raise ValueError("need rows or annihilator")
        self.ncols = ncols
        if rows is not None:
            self.__dict__["rows"] = [list(r) for r in rows]
        if annihilator is not None:
            self.__dict__["annihilator"] = [list(r) for r in annihilator]
        for r in (rows or []) + (annihilator or []):
            if len(r) != ncols:
                raise ShapeMismatch(f"row of length {len(r)} in a span of Q^{ncols}")

    @classmethod
    def from_rows(cls, rows, ncols=None) -> "Span":
        return cls(ncols_of(rows, ncols), rows=rows)

    @classmethod
    def from_annihilator(cls, forms, ncols=None) -> "Span":
        return cls(ncols_of(forms, ncols), annihilator=forms)

    @cached_property
    def rows(self) -> list[list[int]]:
        return kernel_basis(self.annihilator, self.ncols)

    @cached_property
    def annihilator(self) -> list[list[int]]:
        return kernel_basis(self.rows, self.ncols)

    @cached_property
    def rank(self) -> int:
        if "rows" in self.__dict__:
            return rank(self.rows, self.ncols)
        return self.ncols - rank(self.annihilator, self.ncols)

    @property
    def projective_dim(self) -> int:
        return self.rank - 1

    def __add__(self, other: "Span") -> "Span":
        if self.ncols != other.ncols:
            raise ShapeMismatch("spans live in different ambient spaces")
        return Span(self.ncols, rows=self.rows + other.rows)

    def __repr__(self):
        return f"Span(rank={self.rank}, ncols={self.ncols})"


def annihilator(S: Span) -> list[list[int]]:
    """Independent linear forms vanishing on ``S``; ``ncols - rank(S)`` of them."""
    return S.annihilator


def contains(A: Span, B: Span) -> bool:
    """True iff the row space of ``B`` lies inside the row space of ``A``."""
    if A.ncols != B.ncols:
        raise ShapeMismatch("spans live in different ambient spaces")
    if not B.rows:
        return True
    return rank(A.rows + B.rows, A.ncols) == A.rank
