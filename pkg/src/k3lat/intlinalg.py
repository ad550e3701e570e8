"""Exact integer and rational matrix routines.

Matrices are lists of row lists of Python ints (Fractions where stated),
vectors are row vectors. Nothing here ever touches floating point; the
ranks in play (<= 28) keep the dense textbook algorithms fast.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = list[list[int]]
IntVector = list[int]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a, b):
    """Matrix product; entries may be ints or Fractions."""
    if not a or not b:
        return []
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(v, m):
    """Row vector times matrix."""
    return [sum(vi * row[j] for vi, row in zip(v, m)) for j in range(len(m[0]))]


def pairing(gram, x, y):
    """Bilinear form value x . G . y^T."""
    return sum(xi * sum(g * yj for g, yj in zip(row, y)) for xi, row in zip(x, gram))


def is_symmetric(m) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i)
    )


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = gcd(a,b) >= 0 and a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def bareiss_determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    All intermediate divisions are exact integer divisions; the 0x0 matrix
    has determinant 1.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def fraction_inverse(m) -> list[list[Fraction]]:
    """Exact inverse of a nonsingular square matrix, by Gauss-Jordan.

    Raises ZeroDivisionError on a singular input.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def _row_combine(a, u, i, j, coeffs):
    """Apply the unimodular 2x2 transform `coeffs` to rows i, j of a and u."""
    p, q, r, s = coeffs
    a[i], a[j] = (
        [p * x + q * y for x, y in zip(a[i], a[j])],
        [r * x + s * y for x, y in zip(a[i], a[j])],
    )
    u[i], u[j] = (
        [p * x + q * y for x, y in zip(u[i], u[j])],
        [r * x + s * y for x, y in zip(u[i], u[j])],
    )


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with transform.

    Returns (h, u) with u unimodular and u @ m = h, where h has positive
    pivots with increasing pivot columns, entries above each pivot reduced
    into [0, pivot), and zero rows collected at the bottom.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(row) for row in m]
    u = identity(rows)
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            u[r], u[p] = u[p], u[r]
        for i in range(r + 1, rows):
            if a[i][c] == 0:
                continue
            if a[i][c] % a[r][c] == 0:
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            else:
                g, x, y = xgcd(a[r][c], a[i][c])
                _row_combine(a, u, r, i, (x, y, -(a[i][c] // g), a[r][c] // g))
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for j in range(r):
            q = a[j][c] // a[r][c]
            if q:
                a[j] = [x - q * y for x, y in zip(a[j], a[r])]
                u[j] = [x - q * y for x, y in zip(u[j], u[r])]
        r += 1
        if r == rows:
            break
    return a, u


def row_hnf(m: IntMatrix) -> IntMatrix:
    """Canonical HNF basis of the row lattice of m, zero rows dropped."""
    h, _ = hermite_normal_form(m)
    return [row for row in h if any(row)]


def left_kernel(m: IntMatrix) -> IntMatrix:
    """Canonical basis of {x : x @ m = 0} over the integers.

    The kernel of a map into a torsion-free group is saturated, so the
    returned basis spans a primitive sublattice of Z^rows.
    """
    h, u = hermite_normal_form(m)
    ker = [u[i] for i in range(len(h)) if not any(h[i])]
    return row_hnf(ker) if ker else []


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns (left, diag, right) with left @ m @ right = diag, where left and
    right are unimodular and diag is diagonal with nonnegative entries
    forming a divisibility chain d1 | d2 | ...
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(row) for row in m]
    left = identity(rows)
    right = identity(cols)

    def col_combine(i, j, coeffs):
        p, q, r, s = coeffs
        for row in a:
            row[i], row[j] = p * row[i] + q * row[j], r * row[i] + s * row[j]
        for row in right:
            row[i], row[j] = p * row[i] + q * row[j], r * row[i] + s * row[j]

    for t in range(min(rows, cols)):
        # Pull the smallest nonzero entry of the trailing block into (t, t).
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
            left[t], left[bi] = left[bi], left[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            for row in right:
                row[t], row[bj] = row[bj], row[t]
        while True:
            for i in range(t + 1, rows):
                if a[i][t] == 0:
                    continue
                if a[i][t] % a[t][t] == 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    left[i] = [x - q * y for x, y in zip(left[i], left[t])]
                else:
                    g, x, y = xgcd(a[t][t], a[i][t])
                    _row_combine(a, left, t, i, (x, y, -(a[i][t] // g), a[t][t] // g))
            for j in range(t + 1, cols):
                if a[t][j] == 0:
                    continue
                if a[t][j] % a[t][t] == 0:
                    q = a[t][j] // a[t][t]
                    col_combine(j, t, (1, -q, 0, 1))
                else:
                    g, x, y = xgcd(a[t][t], a[t][j])
                    col_combine(t, j, (x, y, -(a[t][j] // g), a[t][t] // g))
            if all(a[i][t] == 0 for i in range(t + 1, rows)) and all(
                a[t][j] == 0 for j in range(t + 1, cols)
            ):
                # Enforce the divisibility chain before moving on.
                offender = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t] != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[offender])]
                left[t] = [x + y for x, y in zip(left[t], left[offender])]
    for t in range(min(rows, cols)):
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
    return left, a, right


def diagonal_of(m: IntMatrix) -> list[int]:
    return [m[i][i] for i in range(min(len(m), len(m[0]) if m else 0))]
