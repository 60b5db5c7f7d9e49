from itertools import product

from six.moves import range


def xgcd(a, b):
    """
    Extended Euclid: returns (g, x, y) with a*x + b*y = g >= 0
    """
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hermite_normal_form(vectors, dimension=None):
    """
    Row-style Hermite normal form of the lattice spanned by integer vectors

    Rows are upper triangular with positive pivots and the entries above each
    pivot reduced into [0, pivot).

    :param vectors: iterable of integer vectors
    :param dimension: ambient dimension, needed when vectors is empty
    :rtype: list of lists (the non-zero rows)

    :Example:

    hermite_normal_form([[2, 0], [1, 1]])  #=> [[1, 1], [0, 2]]
    """
    rows = [list(v) for v in vectors]
    if dimension is None:
        if not rows:
            return []
        dimension = len(rows[0])
    basis = []
    for col in range(dimension):
        pivot = None
        rest = []
        for row in rows:
            if row[col] == 0:
                rest.append(row)
            elif pivot is None:
                pivot = row
            else:
                g, x, y = xgcd(pivot[col], row[col])
                a, b = pivot[col] // g, row[col] // g
                pivot, reduced = ([x * p + y * r for p, r in zip(pivot, row)],
                                  [a * r - b * p for p, r in zip(pivot, row)])
                rest.append(reduced)
        rows = [row for row in rest if any(row)]
        if pivot is None:
            continue
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
    for i, row in enumerate(basis):
        col = _pivot_column(row)
        for j in range(i):
            q = basis[j][col] // row[col]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], row)]
    return basis


def hnf_matrices(d, n):
    """
    Every d x d Hermite normal form of determinant n; these are in bijection
    with the index-n subgroups of Z^d

    :rtype: list of tuples of tuples
    """
    return [tuple(tuple(r) for r in m) for m in _hnf(d, n)]


# private

def _pivot_column(row):
    for i, x in enumerate(row):
        if x:
            return i
    return None


def _divisor_tuples(n, d):
    if d == 1:
        yield (n,)
        return
    for a in range(1, n + 1):
        if n % a == 0:
            for rest in _divisor_tuples(n // a, d - 1):
                yield (a,) + rest


def _hnf(d, n):
    matrices = []
    for diagonal in _divisor_tuples(n, d):
        cells = [(i, j) for j in range(d) for i in range(j)]
        ranges = [range(diagonal[j]) for (i, j) in cells]
        for values in product(*ranges):
            m = [[0] * d for _ in range(d)]
            for i in range(d):
                m[i][i] = diagonal[i]
            for (i, j), v in zip(cells, values):
                m[i][j] = v
            matrices.append(m)
    return sorted(matrices)

