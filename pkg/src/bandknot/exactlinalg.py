"""Exact linear algebra over the integers and rationals.

Everything here is fraction-free or rational-exact: Bareiss determinants
(over the integers and over integer Laurent polynomials), Smith normal form,
signature of a symmetric integer matrix by congruence diagonalization, and
Sylvester resultants.  These are the engines under the knot invariants; no
numerical linear algebra is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPolynomial


def int_det(matrix):
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def laurent_det(matrix, variable="t"):
    """Determinant of a square matrix of LaurentPolynomials (Bareiss).

    Bareiss stays exact over any integral domain with exact division, and
    integer Laurent polynomials form one.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPolynomial.one(variable)
    m = [list(row) for row in matrix]
    sign = 1
    prev = LaurentPolynomial.one(variable)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next(
                (i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPolynomial.zero(variable)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = LaurentPolynomial.zero(variable)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def smith_normal_form(matrix):
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns a list of length min(rows, cols) of non-negative integers in
    divisibility order, padded with zeros for rank deficiency.  Uses greedy
    minimal-pivot selection with full reduction of the active submatrix to
    keep intermediate entries small.
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    size = min(rows, cols)
    diag = []
    top = 0
    while top < size:
        # Locate a minimal-magnitude nonzero pivot in the active submatrix.
        pivot = None
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
                    if v == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = m[top][top]
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // p
                    if q:
                        for j in range(top, cols):
                            m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // p
                    if q:
                        for i in range(top, rows):
                            m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
                        break
            if not dirty:
                break
        # Row and column of the pivot are now clear.  Enforce divisibility:
        # if the pivot fails to divide some remaining entry, fold that row in
        # and redo this elimination step.
        p = abs(m[top][top])
        offender = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, cols):
                m[top][j] += m[offender][j]
            continue
        diag.append(p)
        top += 1
    diag.extend([0] * (size - len(diag)))
    return diag


def signature_symmetric(matrix):
    """Signature of a symmetric integer matrix.

    Congruence diagonalization over the rationals with exact Fraction
    arithmetic; a zero diagonal is repaired with the standard symmetric
    row-plus-column addition (valid away from characteristic 2).
    """
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    sig = 0
    live = list(range(n))
    while live:
        k = next((i for i in live if m[i][i] != 0), None)
        if k is None:
            # Every live diagonal entry is zero; repair with a symmetric
            # row-plus-column addition, which yields diagonal 2*m[k][j].
            k = live[0]
            partner = next(
                (j for j in live if j != k and m[k][j] != 0), None)
            if partner is None:
                live.remove(k)
                continue
            for j in range(n):
                m[k][j] += m[partner][j]
            for i in range(n):
                m[i][k] += m[i][partner]
        pivot = m[k][k]
        sig += 1 if pivot > 0 else -1
        for i in live:
            if i == k:
                continue
            factor = m[i][k] / pivot
            if factor:
                for j in range(n):
                    m[i][j] -= factor * m[k][j]
                for j in range(n):
                    m[j][i] -= factor * m[j][k]
        live.remove(k)
    return sig


def sylvester_resultant(f, g):
    """Resultant of two integer polynomials given as coefficient dicts.

    ``f`` and ``g`` map exponent -> coefficient with all exponents >= 0.
    Computed exactly as the Sylvester matrix determinant.
    """
    if not f or not g:
        return 0
    df = max(f)
    dg = max(g)
    if df == 0 and dg == 0:
        return 1
    size = df + dg
    rows = []
    fc = [f.get(df - i, 0) for i in range(df + 1)]
    gc = [g.get(dg - i, 0) for i in range(dg + 1)]
    for i in range(dg):
        rows.append([0] * i + fc + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gc + [0] * (size - dg - 1 - i))
    return int_det(rows)
