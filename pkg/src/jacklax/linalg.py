"""Exact dense linear algebra over any field whose elements support
+, -, *, / and truthiness (Fraction or Coeff)."""

from .errors import JackLaxError


def solve(A, b, field):
    """Solve A x = b by Gaussian elimination; A is a list of rows."""
    n = len(A)
    m = len(A[0]) if n else 0
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    piv_cols = []
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        pv = M[r][c]
        M[r] = [v / pv for v in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [M[i][j] - f * M[r][j] for j in range(m + 1)]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    # consistency
    for i in range(r, n):
        if M[i][m]:
            raise JackLaxError("inconsistent linear system")
    x = [field.zero] * m
    for i, c in enumerate(piv_cols):
        x[c] = M[i][m]
    return x


def invert(A, field):
    """Inverse of a square matrix (raises if singular)."""
    n = len(A)
    M = [list(row) + [field.one if i == j else field.zero for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        pr = None
        for i in range(c, n):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            raise JackLaxError("singular matrix")
        M[c], M[pr] = M[pr], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [M[i][j] - f * M[c][j] for j in range(2 * n)]
    return [row[n:] for row in M]


def matvec(A, x, field):
    out = []
    for row in A:
        acc = field.zero
        for a, v in zip(row, x):
            if a and v:
                acc = acc + a * v
        out.append(acc)
    return out


def rank(A):
    """Rank by fraction-free-style elimination (rows of field elements)."""
    M = [list(row) for row in A]
    n = len(M)
    if not n:
        return 0
    m = len(M[0])
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        pv = M[r][c]
        for i in range(r + 1, n):
            if M[i][c]:
                f = M[i][c] / pv
                M[i] = [M[i][j] - f * M[r][j] for j in range(m)]
        r += 1
        if r == n:
            break
    return r
