"""The toric ideal of a fan matrix and its weight (Groebner) region.

The ideal is the kernel of the monomial map x_j -> t^{v_j}.  Because the
columns of a fan matrix positively span the whole space, the kernel
lattice contains a strictly positive vector p, and adding the single
binomial x^p - 1 to the lattice-basis binomials already yields the full
toric ideal: modulo x^p - 1 every variable is invertible, so the ideal
equals its saturation with respect to all variables.
"""

from itertools import combinations

from .binomials import BinomialIdeal, buchberger, divides, normal_form, support
from .binomials import initial_ideal_of_marked_basis
from .cones import Cone
from .intmat import dot, identity, mat_vec, primitive


def positive_kernel_vector(V):
    """A strictly positive primitive integer vector in the kernel of V."""
    m = V.m
    U = Cone.from_inequalities(
        [tuple(r) for r in identity(m)], equations=V.rows, dim=m
    )
    p = [0] * m
    for ray in U.rays:
        p = [a + b for a, b in zip(p, ray)]
    if not all(x > 0 for x in p):
        raise ValueError("kernel contains no strictly positive vector; matrix is not complete")
    return primitive(tuple(p))


def toric_ideal(V):
    """A finite generating set of the toric ideal of the fan matrix V."""
    from .intmat import integer_kernel_basis

    kernel = integer_kernel_basis(V.rows)
    vectors = list(kernel)
    vectors.append(positive_kernel_vector(V))
    return BinomialIdeal(V.m, vectors)


def kernel_cone(V):
    """The cone of nonnegative kernel vectors of V (the recession cone of every fiber)."""
    m = V.m
    return Cone.from_inequalities(
        [tuple(r) for r in identity(m)], equations=V.rows, dim=m
    )


def groebner_region_three_ways(V, Q):
    """The weight-region cone computed by three independent constructions.

    (i) the dual of the cone of nonnegative kernel vectors; (ii) the sums
    of row-space vectors of V and nonnegative vectors; (iii) the weights
    whose image under Q stays inside the cone spanned by Q's columns.
    """
    m = V.m
    w_dual = kernel_cone(V).dual()
    w_projection = Cone.from_rays(
        [tuple(r) for r in identity(m)], dim=m, lines=V.rows
    )
    q_cone = Cone.from_rays(Q.columns, dim=Q.r)
    pulled_ineqs = [
        tuple(dot(f, col) for col in zip(*Q.rows)) for f in q_cone.ineqs
    ]
    pulled_eqs = [
        tuple(dot(e, col) for col in zip(*Q.rows)) for e in q_cone.eqs
    ]
    w_preimage = Cone.from_inequalities(pulled_ineqs, pulled_eqs, dim=m)
    return w_dual, w_projection, w_preimage


def groebner_region(V, Q):
    """The cone of weights admitting an initial ideal, cross-checked three ways."""
    w1, w2, w3 = groebner_region_three_ways(V, Q)
    if not (w1 == w2 == w3):
        raise AssertionError("weight-region constructions disagree")
    return w1


def monomials_up_to(nvars, bound):
    """All exponent tuples with coordinate sum at most ``bound``."""
    out = []

    def rec(prefix, remaining, left):
        if remaining == 1:
            for x in range(left + 1):
                out.append(prefix + (x,))
            return
        for x in range(left + 1):
            rec(prefix + (x,), remaining - 1, left - x)

    if nvars == 0:
        return [()]
    rec((), nvars, bound)
    return out


def fiber_key(V, e):
    """Image of an exponent vector under V; two monomials share it iff they share a fiber."""
    return tuple(mat_vec(V.rows, e))


def enumerate_fiber(V, e, bound):
    """All monomials in the fiber of e with coordinate sum at most ``bound``."""
    key = fiber_key(V, e)
    return [u for u in monomials_up_to(V.m, bound) if fiber_key(V, u) == key]


def min_nonminima_check(ideal, order, bound, V=None):
    """Exhaustively verify the fiber-minimum description of the initial ideal.

    Over every exponent vector with coordinate sum <= bound this checks
    that membership in the initial ideal is the same as *not* being the
    order-minimum of its fiber (minima detected via the normal form), and
    that each minimal non-minimum has support disjoint from its fiber
    minimum.  Those minimal non-minima must be exactly the small minimal
    generators of the initial ideal.
    """
    gb = buchberger(ideal, order)
    ini = initial_ideal_of_marked_basis(gb, order, ideal.nvars)
    nonminima = []
    for e in monomials_up_to(ideal.nvars, bound):
        nf = normal_form(e, gb)
        in_ideal = ini.contains(e)
        if in_ideal == (nf == e):
            return False
        if in_ideal:
            nonminima.append(e)
    in_set = set(nonminima)

    def is_minimal(u):
        for i, x in enumerate(u):
            if x:
                below = tuple(y - 1 if k == i else y for k, y in enumerate(u))
                if below in in_set:
                    return False
        return True

    minimal_nonminima = sorted(u for u in nonminima if is_minimal(u))
    for u in minimal_nonminima:
        u0 = normal_form(u, gb)
        if support(u) & support(u0):
            return False
    small_gens = sorted(g for g in ini.gens if sum(g) <= bound)
    if minimal_nonminima != small_gens:
        return False
    return True
