"""Dense exact linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Everything here is small and
desk-scale; no attempt at asymptotic cleverness.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def copy_mat(a):
    return [row[:] for row in a]


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def mat_from_rows(rows):
    return [[frac(x) for x in row] for row in rows]


def transpose(a):
    r, c = shape(a)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(c, a):
    c = frac(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    assert ca == rb, (shape(a), shape(b))
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            x = arow[k]
            if x == 0:
                continue
            brow = b[k]
            for j in range(cb):
                if brow[j] != 0:
                    orow[j] += x * brow[j]
    return out


def mat_mul_dims(a, b, rows, inner, cols):
    """Product with explicit shapes; degenerate dimensions give a zero matrix."""
    if rows == 0 or cols == 0 or inner == 0:
        return zeros(rows, cols)
    return mat_mul(a, b)


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), ZERO) for row in a]


def is_zero_mat(a):
    return all(x == 0 for row in a for x in row)


def mat_eq(a, b):
    return shape(a) == shape(b) and all(ra == rb for ra, rb in zip(a, b))


def hstack(a, b):
    assert len(a) == len(b)
    return [ra + rb for ra, rb in zip(a, b)]


def vstack(a, b):
    return copy_mat(a) + copy_mat(b)


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = copy_mat(a)
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a):
    """Basis of the right kernel {v : a v = 0}, as a list of vectors."""
    rows, cols = shape(a)
    if cols == 0:
        return []
    if rows == 0:
        return [[ONE if j == i else ZERO for j in range(cols)] for i in range(cols)]
    r, pivots = rref(a)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution of a x = b, or None if inconsistent."""
    rows, cols = shape(a)
    assert len(b) == rows
    aug = [a[i][:] + [frac(b[i])] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][cols]
    return x


def solve_matrix(a, b):
    """One solution X of a X = b (matrix right-hand side), or None."""
    rows, cols = shape(a)
    rb, cb = shape(b)
    assert rb == rows
    aug = [a[i][:] + b[i][:] for i in range(rows)]
    r, pivots = rref(aug)
    if any(p >= cols for p in pivots):
        return None
    x = zeros(cols, cb)
    for i, pc in enumerate(pivots):
        for j in range(cb):
            x[pc][j] = r[i][cols + j]
    return x


def inverse(a):
    n, m = shape(a)
    assert n == m
    inv = solve_matrix(a, identity(n))
    if inv is None:
        return None
    return inv if mat_eq(mat_mul(a, inv), identity(n)) else None


def det(a):
    n, m = shape(a)
    assert n == m
    if n == 0:
        return ONE
    m_ = copy_mat(a)
    sign = 1
    d = ONE
    for c in range(n):
        pr = None
        for i in range(c, n):
            if m_[i][c] != 0:
                pr = i
                break
        if pr is None:
            return ZERO
        if pr != c:
            m_[c], m_[pr] = m_[pr], m_[c]
            sign = -sign
        pv = m_[c][c]
        d *= pv
        for i in range(c + 1, n):
            if m_[i][c] != 0:
                f = m_[i][c] / pv
                m_[i] = [x - f * y for x, y in zip(m_[i], m_[c])]
    return d * sign


class Subspace:
    """Row space accumulated in reduced echelon form.

    Supports incremental spans: add vectors, membership tests, and picking
    complements, all exactly over Q.
    """

    def __init__(self, ambient_dim):
        self.ambient = ambient_dim
        self.rows = []      # reduced echelon rows
        self.pivots = []    # pivot column of each row

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v):
        return all(x == 0 for x in self._reduce(v))

    def add(self, v):
        """Insert v into the span; returns True if the dimension grew."""
        v = self._reduce(v)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        pv = v[p]
        v = [x / pv for x in v]
        for i, row in enumerate(self.rows):
            if row[p] != 0:
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, v)]
        k = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(k, v)
        self.pivots.insert(k, p)
        return True

    def extend_basis(self, candidates):
        """Indices of candidate vectors that extend the span to independence."""
        chosen = []
        for i, v in enumerate(candidates):
            if self.add(v):
                chosen.append(i)
        return chosen
