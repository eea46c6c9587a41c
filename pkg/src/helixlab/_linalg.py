"""Small exact linear algebra over Q (Fraction) for n x n matrices with n <= ~8."""

from fractions import Fraction

from .errors import NoSolution


def _to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def det(rows):
    """Exact determinant; Bareiss elimination when every entry is an int."""
    if all(isinstance(x, int) for row in rows for x in row):
        return Fraction(_bareiss(rows))
    m = _to_fractions(rows)
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return result


def _bareiss(rows) -> int:
    m = [list(row) for row in rows]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def solve(rows, rhs):
    """Solve ``rows @ x = rhs`` exactly.

    ``rows`` may be non-square. Raises NoSolution for an inconsistent system
    and for an underdetermined one (the callers need a unique answer).
    """
    m = _to_fractions(rows)
    b = [Fraction(x) for x in rhs]
    n_rows, n_cols = len(m), len(m[0]) if m else 0
    aug = [row + [bi] for row, bi in zip(m, b)]
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in aug):
        raise NoSolution("inconsistent linear system")
    if len(pivots) < n_cols:
        raise NoSolution("linear system has no unique solution")
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return x


def inverse(rows):
    n = len(rows)
    cols = [solve(rows, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)
