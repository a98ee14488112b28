"""Shifted minimal approximant bases.

m_basis iterates the order one step at a time on coefficient arrays;
pm_basis halves the order recursively and multiplies the partial bases;
popov_basis normalises the result to the canonical shifted Popov form;
neg_min_basis keeps only the rows of negative shifted degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ffpoly import Poly
from .polymat import (PolyMatrix, _check_shift, mat_mul, popov_canonical,
                      shifted_row_degrees)

PM_BASIS_THRESHOLD = 32


@dataclass(frozen=True)
class ApproximantBasisResult:
    """An approximant basis F of the given order with rowdeg_s F = degrees."""

    basis: PolyMatrix
    degrees: tuple
    order: int
    shift: tuple


@dataclass(frozen=True)
class NegativePart:
    """Rows of the canonical approximant basis with negative shifted degree."""

    rows: tuple          # tuple of row tuples of Poly (possibly empty)
    degrees: tuple       # matching shifted degrees, all negative
    width: int

    def as_matrix(self, field):
        if not self.rows:
            raise ValueError("empty negative part has no matrix form")
        return PolyMatrix(field, self.rows)


def m_basis(d, A, s):
    """Iterative order-basis computation (order 1 per step).

    At each step the constant residual of F*A is eliminated: rows of smaller
    current shifted degree act as pivots (ties to the lower index), pivot
    rows are multiplied by x, eliminated rows keep their degree.
    """
    n, m = A.nrows, A.ncols
    _check_shift(s, n, "approximant input (rows)")
    if d < 0:
        raise ValueError("order must be nonnegative")
    s = tuple(s)
    if d == 0:
        return ApproximantBasisResult(PolyMatrix.identity(A.field, n), s, 0, s)
    field = A.field
    p = field.p
    dtype = np.int64 if p < 2**31 else object
    Rc = np.zeros((n, m, d), dtype=dtype)
    for i in range(n):
        for j in range(m):
            cs = A.entry(i, j).coeffs[:d]
            if cs:
                Rc[i, j, :len(cs)] = cs
    Fc = np.zeros((n, n, d + 1), dtype=dtype)
    for i in range(n):
        Fc[i, i, 0] = 1
    t = list(s)
    for k in range(d):
        delta = Rc[:, :, k].copy()
        order = sorted(range(n), key=lambda i: (t[i], i))
        pivots = []
        for i in order:
            for (j, c) in pivots:
                f = int(delta[i, c])
                if f:
                    f = f * pow(int(delta[j, c]), p - 2, p) % p
                    delta[i] = (delta[i] - f * delta[j]) % p
                    Fc[i] = (Fc[i] - f * Fc[j]) % p
                    Rc[i] = (Rc[i] - f * Rc[j]) % p
            nz = np.flatnonzero(delta[i])
            if nz.size:
                pivots.append((i, int(nz[0])))
        for (i, _c) in pivots:
            Fc[i, :, 1:] = Fc[i, :, :-1]
            Fc[i, :, 0] = 0
            Rc[i, :, k + 1:] = Rc[i, :, k:-1]
            Rc[i, :, k] = 0
            t[i] += 1
    rows = [[Poly(field, (int(c) for c in Fc[i, j])) for j in range(n)]
            for i in range(n)]
    return ApproximantBasisResult(PolyMatrix(field, rows), tuple(t), d, s)


def pm_basis(d, A, s, threshold=PM_BASIS_THRESHOLD):
    """Divide-and-conquer order basis: split the order, combine by product."""
    if d <= threshold:
        return m_basis(d, A, s)
    _check_shift(s, A.nrows, "approximant input (rows)")
    s = tuple(s)
    d1 = (d + 1) // 2
    d2 = d - d1
    first = pm_basis(d1, A.truncated(d1), s, threshold)
    residual = mat_mul(first.basis, A.truncated(d))
    field = A.field
    shifted_rows = [[Poly(field, e.coeffs[d1:d]) for e in row]
                    for row in residual.rows]
    second = pm_basis(d2, PolyMatrix(field, shifted_rows), first.degrees,
                      threshold)
    F = mat_mul(second.basis, first.basis)
    return ApproximantBasisResult(F, second.degrees, d, s)


def popov_basis(d, A, s):
    """Canonical shifted-Popov approximant basis (unique for d, A, s)."""
    raw = pm_basis(d, A, s)
    F = popov_canonical(raw.basis, raw.shift)
    degrees = shifted_row_degrees(F, raw.shift)
    return ApproximantBasisResult(F, degrees, d, raw.shift)


def neg_min_basis(d, A, s):
    """Negative part of the canonical approximant basis."""
    full = popov_basis(d, A, s)
    rows = []
    degrees = []
    for row, delta in zip(full.basis.rows, full.degrees):
        if delta < 0:
            rows.append(row)
            degrees.append(delta)
    return NegativePart(tuple(rows), tuple(degrees), full.basis.ncols)
