"""Polynomial matrices over GF(p) with shifted-degree machinery.

Shifts are plain tuples of integers, one entry per column of whatever they
weight.  Row degrees use NEG_INF for zero rows.  The pivot of a nonzero row
under a shift is the *rightmost* column attaining the shifted row degree;
with that convention the leading matrix of a Popov-form matrix is unit lower
triangular.
"""

from __future__ import annotations

from .ffpoly import NEG_INF, Poly, PrimeField, _check_same_field, _mul_coeffs


class PolyMatrix:
    """Dense rectangular matrix of Poly entries over one prime field."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        grid = []
        width = None
        for row in rows:
            entries = []
            for e in row:
                if isinstance(e, Poly):
                    _check_same_field(field, e.field)
                else:
                    e = Poly(field, e if isinstance(e, (list, tuple)) else (e,))
                entries.append(e)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ValueError("ragged rows in matrix")
            grid.append(tuple(entries))
        if not grid or width == 0:
            raise ValueError("matrix must have at least one row and column")
        self.field = field
        self.rows = tuple(grid)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def from_coeff_lists(cls, field, nested):
        return cls(field, [[Poly(field, e) for e in row] for row in nested])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def transpose(self):
        return PolyMatrix(self.field, list(zip(*self.rows)))

    def truncated(self, order):
        return PolyMatrix(self.field,
                          [[e.truncated(order) for e in row] for row in self.rows])

    def max_degree(self):
        d = NEG_INF
        for row in self.rows:
            for e in row:
                d = max(d, e.degree)
        return d

    def to_coeff_lists(self):
        return [[e.to_list() for e in row] for row in self.rows]

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and other.field == self.field
                and other.rows == self.rows)

    def __hash__(self):
        return hash((self.field.p, self.rows))

    def __mul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        body = "\n".join("  [" + ", ".join(map(repr, row)) + "]"
                         for row in self.rows)
        return f"PolyMatrix over {self.field!r}:\n{body}"


# ---------------------------------------------------------------------------
# shifted degrees and predicates


def _check_shift(s, width, what="matrix"):
    if len(s) != width:
        raise ValueError(f"shift length {len(s)} does not match {what} "
                         f"width {width}")


def row_shifted_degree(row, s):
    _check_shift(s, len(row), "row")
    return max((e.degree + si if not e.is_zero() else NEG_INF)
               for e, si in zip(row, s))


def row_pivot(row, s):
    """Rightmost column attaining the shifted degree; None for a zero row."""
    d = row_shifted_degree(row, s)
    if d == NEG_INF:
        return None
    for j in range(len(row) - 1, -1, -1):
        if not row[j].is_zero() and row[j].degree + s[j] == d:
            return j
    raise AssertionError("unreachable")


def shifted_row_degrees(A, s):
    _check_shift(s, A.ncols)
    return tuple(row_shifted_degree(row, s) for row in A.rows)


def shifted_leading_matrix(A, s):
    """Constant matrix of coefficients at the shifted row degrees.

    Entry (i, j) is the coefficient of x^(d_i - s_j) in A[i][j].  Zero rows
    are rejected since they have no shifted degree.
    """
    degs = shifted_row_degrees(A, s)
    if any(d == NEG_INF for d in degs):
        raise ValueError("zero row has no leading coefficients")
    lead = []
    for row, d in zip(A.rows, degs):
        lead.append([e.coefficient(d - sj) if isinstance(d - sj, int) else 0
                     for e, sj in zip(row, s)])
    return lead


def _rank_mod_p(rows, p):
    """Rank of a small constant matrix over GF(p) by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] % p:
                f = m[i][col] % p
                m[i] = [(v - f * w) % p for v, w in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def is_row_reduced(A, s):
    """True iff the shifted leading matrix has full row rank."""
    _check_shift(s, A.ncols)
    try:
        lead = shifted_leading_matrix(A, s)
    except ValueError:
        return False
    return _rank_mod_p(lead, A.field.p) == A.nrows


def is_popov(A, s):
    """Shifted Popov predicate for square nonsingular matrices."""
    if A.nrows != A.ncols:
        raise ValueError("Popov form is defined for square matrices only")
    _check_shift(s, A.ncols)
    try:
        lead = shifted_leading_matrix(A, s)
    except ValueError:
        return False
    n = A.nrows
    for i in range(n):
        if lead[i][i] != 1:
            return False
        for j in range(i + 1, n):
            if lead[i][j] != 0:
                return False
    for j in range(n):
        dj = A.entry(j, j).degree
        if dj == NEG_INF:
            return False
        for i in range(n):
            if i != j and A.entry(i, j).degree >= dj:
                return False
    return True


# ---------------------------------------------------------------------------
# multiplication


def mat_mul(A, B):
    """Matrix product over GF(p)[x]."""
    if not isinstance(A, PolyMatrix) or not isinstance(B, PolyMatrix):
        raise TypeError("mat_mul expects PolyMatrix operands")
    _check_same_field(A.field, B.field)
    if A.ncols != B.nrows:
        raise ValueError(f"dimension mismatch {A.nrows}x{A.ncols} times "
                         f"{B.nrows}x{B.ncols}")
    p = A.field.p
    da, db = A.max_degree(), B.max_degree()
    la = int(da) + 1 if da != NEG_INF else 0
    lb = int(db) + 1 if db != NEG_INF else 0
    if la and lb and min(la, lb) > 24 and p < 2**40:
        return _mat_mul_packed(A, B, la, lb)
    field = A.field
    out = []
    for i in range(A.nrows):
        row = []
        for j in range(B.ncols):
            acc = field.zero()
            for k in range(A.ncols):
                e = A.entry(i, k)
                f = B.entry(k, j)
                if not e.is_zero() and not f.is_zero():
                    acc = acc + e * f
            row.append(acc)
        out.append(row)
    return PolyMatrix(field, out)


def _mat_mul_packed(A, B, la, lb):
    # Kronecker-pack every entry once, multiply as plain integers
    from .ffpoly import _pack, _unpack

    p = A.field.p
    inner = A.ncols
    bound = inner * min(la, lb) * (p - 1) * (p - 1)
    slot = (bound.bit_length() + 7) // 8
    pa = [[_pack(e.coeffs, slot) if e.coeffs else 0 for e in row]
          for row in A.rows]
    pb = [[_pack(e.coeffs, slot) if e.coeffs else 0 for e in row]
          for row in B.rows]
    field = A.field
    nlen = la + lb - 1
    out = []
    for i in range(A.nrows):
        arow = pa[i]
        row = []
        for j in range(B.ncols):
            acc = 0
            for k in range(inner):
                if arow[k] and pb[k][j]:
                    acc += arow[k] * pb[k][j]
            if acc:
                coeffs = _unpack(acc, slot, nlen, p)
                row.append(Poly(field, coeffs))
            else:
                row.append(field.zero())
        out.append(row)
    return PolyMatrix(field, out)


def mat_mul_trunc(A, B, order):
    """Product truncated entrywise modulo x^order."""
    return mat_mul(A, B).truncated(order)


def vec_mat_mul(v, A):
    """Row vector (tuple of Poly) times matrix."""
    if len(v) != A.nrows:
        raise ValueError("vector length does not match matrix rows")
    field = A.field
    out = []
    for j in range(A.ncols):
        acc = field.zero()
        for k in range(len(v)):
            if not v[k].is_zero() and not A.entry(k, j).is_zero():
                acc = acc + v[k] * A.entry(k, j)
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# weak Popov / Popov canonicalisation


def _row_sub_scaled(row, other, q):
    """row - q * other, entrywise."""
    return tuple(e - q * f for e, f in zip(row, other))


def _weak_popov_rows(rows, s, require_full_rank=True):
    """Mulders-Storjohann successive cancellation to distinct pivots.

    Each step subtracts a quotient multiple of the lower-degree row from the
    higher-degree one; (shifted degree, pivot index) of the modified row
    decreases lexicographically, so the loop terminates.
    """
    work = [tuple(r) for r in rows]
    info = [(row_shifted_degree(r, s), row_pivot(r, s)) for r in work]
    while True:
        by_pivot = {}
        clash = None
        for i, (d, c) in enumerate(info):
            if c is None:
                if require_full_rank:
                    raise ValueError("matrix is singular (zero row produced)")
                continue
            if c in by_pivot:
                clash = (by_pivot[c], i, c)
                break
            by_pivot[c] = i
        if clash is None:
            return work, info
        i, j, c = clash
        # keep the row of smaller shifted degree (ties: lower index)
        if (info[j][0], j) < (info[i][0], i):
            i, j = j, i
        lo, hi = work[i], work[j]
        q = hi[c] // lo[c]
        new = _row_sub_scaled(hi, lo, q)
        work[j] = new
        d = row_shifted_degree(new, s) if any(not e.is_zero() for e in new) \
            else NEG_INF
        info[j] = (d, None if d == NEG_INF else row_pivot(new, s))


def popov_canonical(A, s):
    """The unique shifted Popov form of the row space of a nonsingular A."""
    if A.nrows != A.ncols:
        raise ValueError("Popov canonical form requires a square matrix")
    _check_shift(s, A.ncols)
    n = A.nrows
    work, info = _weak_popov_rows(A.rows, s)
    # pivots are distinct, hence a permutation of the columns
    order = sorted(range(n), key=lambda i: info[i][1])
    work = [work[i] for i in order]
    field = A.field
    # make pivots (diagonal after sorting) monic
    for i in range(n):
        lc = work[i][i].leading_coefficient()
        if lc != 1:
            inv = field.inv(lc)
            work[i] = tuple(e * inv for e in work[i])
    # reduce off-diagonal entries in pivot columns below the diagonal degree
    for _ in range(1000):
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                e = work[i][j]
                piv = work[j][j]
                if not e.is_zero() and e.degree >= piv.degree:
                    q = e // piv
                    work[i] = _row_sub_scaled(work[i], work[j], q)
                    changed = True
        if not changed:
            break
    else:
        raise RuntimeError("Popov normalisation did not converge")
    out = PolyMatrix(field, work)
    if not is_popov(out, s):
        raise ValueError("matrix is singular or not normalisable")
    return out


def row_space_membership(v, A, s=None):
    """True iff row vector v lies in the GF(p)[x]-row space of A.

    A must be row reduced under the supplied shift (all-zeros by default);
    the test runs successive cancellation of v against a weak-Popov copy
    of A.
    """
    if s is None:
        s = (0,) * A.ncols
    if len(v) != A.ncols:
        raise ValueError("vector length does not match matrix width")
    if not is_row_reduced(A, s):
        raise ValueError("membership test requires a row-reduced matrix")
    work, info = _weak_popov_rows(A.rows, s)
    pivots = {c: i for i, (d, c) in enumerate(info)}
    v = tuple(v)
    while any(not e.is_zero() for e in v):
        dv = row_shifted_degree(v, s)
        c = row_pivot(v, s)
        i = pivots.get(c)
        if i is None or info[i][0] > dv:
            return False
        q = v[c] // work[i][c]
        v = _row_sub_scaled(v, work[i], q)
    return True


# ---------------------------------------------------------------------------
# exact determinants and adjoints (reference-grade, small matrices)


def determinant(A):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.nrows != A.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = A.nrows
    field = A.field
    m = [list(row) for row in A.rows]
    sign = 1
    prev = field.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()),
                        None)
            if swap is None:
                return field.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                if not r.is_zero():
                    raise AssertionError("non-exact division in Bareiss")
                m[i][j] = q
            m[i][k] = field.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _minor(A, drop_row, drop_col):
    rows = [[e for j, e in enumerate(row) if j != drop_col]
            for i, row in enumerate(A.rows) if i != drop_row]
    return PolyMatrix(A.field, rows)


def cofactor_adjoint(A):
    """Full adjoint adj(A) = det(A) A^-1 by cofactor expansion (small n)."""
    if A.nrows != A.ncols:
        raise ValueError("adjoint of a non-square matrix")
    n = A.nrows
    if n == 1:
        return PolyMatrix(A.field, [[A.field.one()]])
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            d = determinant(_minor(A, j, i))
            row.append(d if (i + j) % 2 == 0 else -d)
        out.append(row)
    return PolyMatrix(A.field, out)
