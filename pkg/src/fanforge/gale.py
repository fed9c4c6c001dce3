"""Gale duality: weight matrices, bunches, nef and movable cones.

The Gale dual of an n x m fan matrix V is an r x m integer matrix Q
(r = m - n) whose rows form a basis of the kernel lattice of V; it is
well defined up to left multiplication by GL_r(Z).  Completeness of V
guarantees a strictly positive kernel vector, which lets us normalise Q
to have nonnegative entries.

Under this duality a fan corresponds to a *bunch*: for each maximal cone
(indices J) the cone on the complementary columns of Q.  The
intersection of the bunch cones is the fan's nef chamber, and the fan is
projective exactly when that chamber is full-dimensional.
"""

from math import gcd

from .cones import Cone
from .fans import FanMatrix, validate_fan_matrix
from .intmat import (
    hermite_normal_form,
    hnf_rows,
    integer_kernel_basis,
    lattices_equal,
    mat_mul,
    mat_vec,
    solve_rational,
    transpose,
    unimodular_inverse,
)
from .toric import positive_kernel_vector


class WeightMatrix:
    """An r x m nonnegative integer matrix whose rows are a kernel basis of V."""

    __slots__ = ("rows", "r", "m", "source")

    def __init__(self, rows, source=None):
        self.rows = tuple(tuple(r) for r in rows)
        self.r = len(self.rows)
        self.m = len(self.rows[0])
        self.source = source
        if any(x < 0 for row in self.rows for x in row):
            raise ValueError("weight matrix entries must be nonnegative")
        if source is not None:
            if mat_mul(source.rows, transpose(self.rows)) != [
                [0] * self.r for _ in range(source.n)
            ]:
                raise ValueError("rows are not orthogonal to the fan matrix")
            if not lattices_equal(self.rows, integer_kernel_basis(source.rows)):
                raise ValueError("rows are not a basis of the kernel lattice")

    def column(self, j):
        return tuple(row[j - 1] for row in self.rows)

    @property
    def columns(self):
        return tuple(self.column(j) for j in range(1, self.m + 1))

    def cone_of_columns(self, indices):
        return Cone.from_rays([self.column(j) for j in indices], dim=self.r)

    def __eq__(self, other):
        return isinstance(other, WeightMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"WeightMatrix({[list(r) for r in self.rows]})"


def _basis_with_first_row(v, basis):
    """A basis of the lattice spanned by ``basis`` whose first row is ``v``.

    ``v`` must be primitive in the lattice (integer coefficients with
    gcd 1), which makes the completion possible.
    """
    coeffs = solve_rational(transpose(basis), v)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise ValueError("vector is not in the lattice")
    a = [int(c) for c in coeffs]
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    if g != 1:
        raise ValueError("vector is not primitive in the lattice")
    _, W = hermite_normal_form([[x] for x in a])
    A = unimodular_inverse(transpose(W))
    rows = mat_mul(A, basis)
    assert tuple(rows[0]) == tuple(v)
    return rows


def gale_dual(V):
    """A nonnegative Gale dual matrix of a fan matrix.

    Starts from the Hermite-canonical kernel basis, rebases it so that a
    strictly positive kernel vector is the first row, then shifts each
    remaining row by positive multiples of that vector until nonnegative
    (elementary row operations, so the rows stay a lattice basis).
    """
    kernel = integer_kernel_basis(V.rows)
    p = positive_kernel_vector(V)
    rows = _basis_with_first_row(p, [list(r) for r in kernel])
    out = [list(rows[0])]
    for row in rows[1:]:
        c = 0
        for x, px in zip(row, p):
            if x < 0:
                need = (-x + px - 1) // px
                c = max(c, need)
        out.append([x + c * px for x, px in zip(row, p)])
    return WeightMatrix(out, source=V)


def cf_cover(V):
    """The fan matrix, with full column lattice, sharing V's Gale dual.

    Computed as the Gale dual of the Gale dual; its rows are a saturated
    kernel basis, which forces all Smith invariants to 1.
    """
    Q = gale_dual(V)
    rows = integer_kernel_basis(Q.rows)
    cover = validate_fan_matrix(rows)
    if not cover.is_cf:
        raise AssertionError("double Gale dual failed to produce a CF matrix")
    return cover


def bunch_of_fan(fan, Q):
    """The bunch of the fan: per maximal cone, the cone on the complementary Q-columns."""
    m = Q.m
    cones = []
    for J in fan.cones:
        complement = [j for j in range(1, m + 1) if j not in J]
        cones.append(Q.cone_of_columns(complement))
    return tuple(cones)


def nef_cone(fan, Q):
    """The intersection of all bunch cones of the fan."""
    current = Cone.full_space(Q.r)
    for c in bunch_of_fan(fan, Q):
        current = current.intersect(c)
    return current


def is_projective(fan, Q):
    """Whether the fan's nef chamber is full-dimensional."""
    return nef_cone(fan, Q).dimension() == Q.r


def movable_cone(Q):
    """Intersection over i of the cones on Q's columns with column i deleted."""
    current = Cone.full_space(Q.r)
    for i in range(1, Q.m + 1):
        indices = [j for j in range(1, Q.m + 1) if j != i]
        current = current.intersect(Q.cone_of_columns(indices))
    return current


def effective_cone(Q):
    """The cone spanned by all columns of Q."""
    return Q.cone_of_columns(range(1, Q.m + 1))


def anticanonical_class(Q):
    """The class of the sum of all columns, Q . (1, ..., 1)."""
    return tuple(mat_vec(Q.rows, [1] * Q.m))


def family_matrices(p, q):
    """The one-parameter deformation family of rank-3 weight/fan matrix pairs.

    For coprime positive p, q the weight matrix places the fourth column
    class at (0, q, p); the printed fan matrix is returned verbatim and
    checked to be a Gale dual of it.  (1, 1) recovers the classical
    Berchtold-Hausen pair.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    q_rows = [
        [1, 1, 0, 0, 1, 0],
        [0, 1, 1, q, 0, 0],
        [0, 0, 0, p, 1, 1],
    ]
    v_rows = [
        [1, 0, 0, 0, -1, 1],
        [0, 1, q - 1, -1, -1, p + 1],
        [0, 0, q, -1, 0, p],
    ]
    V = validate_fan_matrix(v_rows)
    Q = WeightMatrix(q_rows, source=V)
    return Q, V


def weight_matrix_from_rows(rows):
    """A WeightMatrix from explicit rows, with the fan matrix computed as its kernel basis."""
    v_rows = integer_kernel_basis([tuple(r) for r in rows])
    V = validate_fan_matrix(v_rows)
    return WeightMatrix(rows, source=V), V
