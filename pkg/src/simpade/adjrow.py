"""First adjoint row of a polynomial matrix whose determinant is a power of x.

The solve expands around x = 1: det F = x^D gives det F(1) = 1, so F is
invertible at that point over every prime field, including GF(2).  A Newton
iteration inverts the shifted matrix as a truncated series, the known degree
bound D on adjoint entries fixes the precision, and substituting back yields
the exact polynomial row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffpoly import Poly, poly_substitute_shift
from .polymat import (NEG_INF, PolyMatrix, determinant, mat_mul_trunc,
                      vec_mat_mul)

_DEBUG_DET_MAX_DIM = 6


@dataclass(frozen=True)
class AdjRowResult:
    """First row w of adj(F), with w * F = x^D * e1 and det F = x^D."""

    row: tuple
    det_exponent: int


def det_power_of_x(F):
    """Exponent D with det F = x^D.

    For a Popov-form F the exponent is the sum of the diagonal degrees; the
    claim is verified against an exact determinant on small matrices and by
    the necessary evaluation checks otherwise.
    """
    if F.nrows != F.ncols:
        raise ValueError("determinant exponent of a non-square matrix")
    n = F.nrows
    exponent = 0
    for i in range(n):
        d = F.entry(i, i).degree
        if d == NEG_INF:
            raise ValueError("determinant is not a power of x (zero diagonal)")
        exponent += int(d)
    if n <= _DEBUG_DET_MAX_DIM:
        det = determinant(F)
        field = F.field
        expected = Poly(field, (0,) * exponent + (1,))
        if det != expected:
            raise ValueError("determinant is not a power of x")
    else:
        if _det_at_one(F) != 1:
            raise ValueError("determinant is not a power of x (det F(1) != 1)")
    return exponent


def _const_matrix(F, alpha):
    return [[e(alpha) for e in row] for row in F.rows]


def _det_at_one(F):
    p = F.field.p
    m = _const_matrix(F, 1)
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], p - 2, p)
        for i in range(col + 1, n):
            f = m[i][col] * inv % p
            if f:
                m[i] = [(v - f * w) % p for v, w in zip(m[i], m[col])]
    return det % p


def _invert_const(mat, p):
    n = len(mat)
    m = [list(row) + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] % p), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], p - 2, p)
        m[col] = [v * inv % p for v in m[col]]
        for i in range(n):
            if i != col and m[i][col] % p:
                f = m[i][col] % p
                m[i] = [(v - f * w) % p for v, w in zip(m[i], m[col])]
    return [row[n:] for row in m]


def lifted_vector_solve(v, F, precision):
    """Exact polynomial w with w * F = v, assuming deg w < precision.

    Works by substituting x -> x + 1, Newton-inverting the shifted matrix as
    a power series in x, multiplying, and substituting back.  Raises if F is
    singular at the expansion point or if the residual is nonzero.
    """
    if F.nrows != F.ncols:
        raise ValueError("lifted solve requires a square matrix")
    if len(v) != F.nrows:
        raise ValueError("vector length does not match matrix dimension")
    if precision < 1:
        raise ValueError("precision must be positive")
    field = F.field
    p = field.p
    one = field(1)
    Fh = PolyMatrix(field, [[poly_substitute_shift(e, one) for e in row]
                            for row in F.rows])
    vh = tuple(poly_substitute_shift(e, one) for e in v)
    const_inv = _invert_const(_const_matrix(Fh, 0), p)
    if const_inv is None:
        raise ValueError("matrix is singular at the expansion point")
    X = PolyMatrix(field, [[Poly(field, (c,)) for c in row]
                           for row in const_inv])
    ident = PolyMatrix.identity(field, F.nrows)
    two_i = PolyMatrix(field, [[e + e for e in row] for row in ident.rows])
    prec = 1
    while prec < precision:
        prec = min(2 * prec, precision)
        FX = mat_mul_trunc(Fh.truncated(prec), X, prec)
        corr = PolyMatrix(field, [[two_i.entry(i, j) - FX.entry(i, j)
                                   for j in range(F.nrows)]
                                  for i in range(F.nrows)])
        X = mat_mul_trunc(X, corr, prec)
    wh = tuple(e.truncated(precision) for e in vec_mat_mul(vh, X))
    minus_one = field(-1)
    w = tuple(poly_substitute_shift(e, minus_one) for e in wh)
    if vec_mat_mul(w, F) != tuple(v):
        raise ValueError("no polynomial solution at the requested precision")
    return w


def adjoint_first_row(F):
    """First row of adj(F) for F with monomial determinant x^D."""
    exponent = det_power_of_x(F)
    field = F.field
    target = [field.zero()] * F.nrows
    target[0] = Poly(field, (0,) * exponent + (1,))
    row = lifted_vector_solve(tuple(target), F, exponent + 1)
    return AdjRowResult(row, exponent)
