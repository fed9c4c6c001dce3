"""Exact linear algebra over the integers and rationals.

Matrices are plain lists (or tuples) of rows of Python ints, so every
computation here is exact; no floating point is used anywhere in the
package.  Sizes are tiny (a handful of rows/columns), which keeps the
classical algorithms below entirely adequate.
"""

from fractions import Fraction
from math import gcd


def identity(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def mat_mul(A, B):
    BT = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in BT] for row in A]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def is_zero(v):
    return all(x == 0 for x in v)


def content(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v, orient=False):
    """Divide an integer vector by the gcd of its entries.

    With ``orient=True`` the sign is normalised so that the first nonzero
    entry is positive.  The zero vector is returned unchanged.
    """
    g = content(v)
    if g == 0:
        return tuple(v)
    w = tuple(x // g for x in v)
    if orient:
        for x in w:
            if x != 0:
                if x < 0:
                    w = tuple(-y for y in w)
                break
    return w


def fractions_to_primitive(v):
    """Clear denominators of a rational vector and reduce to a primitive integer vector."""
    fracs = [Fraction(x) for x in v]
    lcm = 1
    for f in fracs:
        d = f.denominator
        lcm = lcm * d // gcd(lcm, d)
    return primitive(tuple(int(f * lcm) for f in fracs))


def _row_sub(M, i, j, q):
    if q:
        M[i] = [a - q * b for a, b in zip(M[i], M[j])]


def hermite_normal_form(A):
    """Row Hermite normal form of an integer matrix.

    Returns ``(H, U)`` with ``H = U @ A``, ``U`` unimodular, pivots of ``H``
    positive and every entry above a pivot reduced into ``[0, pivot)``.
    Zero rows sink to the bottom.  The nonzero rows of ``H`` are the
    canonical basis of the row lattice of ``A``, so two matrices span the
    same lattice exactly when their forms agree.
    """
    H = [list(r) for r in A]
    nrows = len(H)
    U = identity(nrows)
    ncols = len(H[0]) if nrows else 0
    piv = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(piv, nrows) if H[i][col]]
            if not nz:
                row = None
                break
            i0 = min(nz, key=lambda i: (abs(H[i][col]), i))
            if len(nz) == 1:
                row = i0
                break
            for i in nz:
                if i == i0:
                    continue
                q = H[i][col] // H[i0][col]
                _row_sub(H, i, i0, q)
                _row_sub(U, i, i0, q)
        if row is None:
            continue
        if row != piv:
            H[piv], H[row] = H[row], H[piv]
            U[piv], U[row] = U[row], U[piv]
        if H[piv][col] < 0:
            H[piv] = [-x for x in H[piv]]
            U[piv] = [-x for x in U[piv]]
        p = H[piv][col]
        for i in range(piv):
            q = H[i][col] // p
            _row_sub(H, i, piv, q)
            _row_sub(U, i, piv, q)
        piv += 1
    return H, U


def hnf_rows(A):
    """Nonzero rows of the Hermite form, as a tuple of tuples (canonical lattice basis)."""
    H, _ = hermite_normal_form(A)
    return tuple(tuple(r) for r in H if any(r))


def rank(A):
    return len(hnf_rows(A)) if A else 0


def lattices_equal(A, B):
    """Whether two row sets span the same sublattice of Z^m."""
    return hnf_rows(A) == hnf_rows(B)


def det(A):
    """Determinant of a square integer matrix (fraction-free Bareiss elimination)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def integer_kernel_basis(A, ncols=None):
    """Basis, as rows in Hermite form, of the lattice {x in Z^m : A @ x = 0}.

    The kernel of an integer matrix is a saturated sublattice, so the
    returned basis is cotorsion-free (all its Smith invariants are 1).
    An empty ``A`` needs ``ncols`` and yields the standard basis.
    """
    if not A:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return tuple(tuple(r) for r in identity(ncols))
    H, U = hermite_normal_form(transpose(A))
    kernel_rows = [U[i] for i in range(len(H)) if not any(H[i])]
    if not kernel_rows:
        return ()
    return hnf_rows(kernel_rows)


def smith_invariants(A):
    """Invariant factors d1 | d2 | ... of an integer matrix (nonzero Smith diagonal)."""
    if not A:
        return ()
    M = [list(r) for r in A]
    nr, nc = len(M), len(M[0])
    t = 0
    while t < nr and t < nc:
        pivot = min(
            ((abs(M[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if M[i][j]),
            default=None,
        )
        if pivot is None:
            break
        _, pi, pj = pivot
        M[t], M[pi] = M[pi], M[t]
        for row in M:
            row[t], row[pj] = row[pj], row[t]
        dirty = False
        for i in range(t + 1, nr):
            if M[i][t]:
                q = M[i][t] // M[t][t]
                _row_sub(M, i, t, q)
                if M[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            if M[t][j]:
                q = M[t][j] // M[t][t]
                for row in M:
                    row[j] -= q * row[t]
                if M[t][j]:
                    dirty = True
        if dirty:
            continue
        t += 1
    diag = [abs(M[i][i]) for i in range(min(nr, nc)) if M[i][i]]
    # enforce the divisibility chain; diag(a, b) and diag(gcd, lcm) are equivalent
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return tuple(diag)


def solve_rational(A, b):
    """One rational solution x of A @ x = b, or None if the system is inconsistent.

    Free variables are set to zero; for a nonsingular square system this is
    the unique solution.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    M = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(A, b)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if M[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for row_idx, c in enumerate(piv_cols):
        x[c] = M[row_idx][ncols]
    return tuple(x)


def unimodular_inverse(M):
    """Exact inverse of a unimodular integer matrix, as an integer matrix."""
    k = len(M)
    cols = []
    for j in range(k):
        e = [1 if i == j else 0 for i in range(k)]
        sol = solve_rational(M, e)
        if sol is None:
            raise ValueError("matrix is singular")
        col = []
        for f in sol:
            if f.denominator != 1:
                raise ValueError("matrix is not unimodular")
            col.append(int(f))
        cols.append(col)
    return transpose(cols)
