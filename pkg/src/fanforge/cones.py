"""Rational polyhedral cones with exact V- and H-representations.

A cone is stored canonically: ``rays`` are the primitive extreme rays of
the pointed part (orthogonally projected off the lineality space) and
``lines`` is the Hermite-form basis of the lineality space.  Conversion
between generators and facet inequalities uses the double description
method, which is plenty for the small ambient dimensions handled here.

All vectors are integer tuples; intermediate arithmetic uses Fractions.
"""

from fractions import Fraction

from .intmat import (
    det,
    dot,
    fractions_to_primitive,
    hnf_rows,
    identity,
    integer_kernel_basis,
    primitive,
    rank,
    solve_rational,
)


def _independent_rows(M, target):
    """Indices of the first ``target`` linearly independent rows of M."""
    chosen = []
    basis = []
    for idx, row in enumerate(M):
        cand = basis + [row]
        if rank(cand) > len(basis):
            basis = cand
            chosen.append(idx)
            if len(chosen) == target:
                return chosen
    return None


def _extreme_rays_pointed(M, t):
    """Extreme rays of the pointed cone {y in R^t : M @ y >= 0}.

    ``M`` must have full column rank t (which makes the cone pointed).
    Incremental double description with the combinatorial adjacency test;
    each ray carries the set of constraints tight at it.
    """
    if t == 0:
        return []
    base = _independent_rows(M, t)
    if base is None:
        raise ValueError("constraint matrix does not have full column rank")
    B = [M[i] for i in base]
    rays = []
    for j in range(t):
        e = [1 if i == j else 0 for i in range(t)]
        col = solve_rational(B, e)
        rays.append(fractions_to_primitive(col))
    processed = list(base)

    def tight_set(ray):
        return frozenset(i for i in processed if dot(M[i], ray) == 0)

    ray_data = [(r, tight_set(r)) for r in rays]
    remaining = [i for i in range(len(M)) if i not in set(base)]
    for a in remaining:
        processed.append(a)
        scores = [(r, z, dot(M[a], r)) for r, z in ray_data]
        keep = [(r, z | ({a} if s == 0 else set())) for r, z, s in scores if s >= 0]
        pos = [(r, z, s) for r, z, s in scores if s > 0]
        neg = [(r, z, s) for r, z, s in scores if s < 0]
        if neg:
            current = [(r, z) for r, z, _ in scores]

            def adjacent(r1, z1, r2, z2):
                zc = z1 & z2
                return not any(
                    zc <= z3 for r3, z3 in current if r3 != r1 and r3 != r2
                )

            seen = {r for r, _ in keep}
            for r1, z1, s1 in pos:
                for r2, z2, s2 in neg:
                    if not adjacent(r1, z1, r2, z2):
                        continue
                    w = primitive(tuple(s1 * b - s2 * a_ for a_, b in zip(r1, r2)))
                    if w in seen:
                        continue
                    seen.add(w)
                    keep.append((w, tight_set(w)))
        ray_data = [(r, frozenset(z)) for r, z in keep]
    return [r for r, _ in ray_data]


def _project_off(vec, lines):
    """Orthogonal projection of an integer vector off the span of ``lines``, made primitive."""
    if not lines:
        return primitive(vec)
    gram = [[dot(a, b) for b in lines] for a in lines]
    rhs = [dot(a, vec) for a in lines]
    coeff = solve_rational(gram, rhs)
    proj = [Fraction(x) - sum(c * Fraction(l[i]) for c, l in zip(coeff, lines))
            for i, x in enumerate(vec)]
    return fractions_to_primitive(proj)


def _rays_from_halfspaces(ineqs, eqs, dim):
    """V-representation (extreme rays, lineality basis) of {x : ineqs.x >= 0, eqs.x = 0}."""
    stack = [tuple(r) for r in ineqs] + [tuple(r) for r in eqs]
    lines = integer_kernel_basis(stack, dim) if stack else integer_kernel_basis([], dim)
    sub = integer_kernel_basis([tuple(r) for r in eqs], dim) if eqs else \
        tuple(tuple(r) for r in identity(dim))
    if not sub:
        return (), ()
    reduced = [tuple(dot(n, s) for s in sub) for n in ineqs]
    reduced = [r for r in reduced if any(r)]
    pointed_basis = hnf_rows(reduced) if reduced else ()
    if not pointed_basis:
        return (), lines
    t = len(pointed_basis)
    M = [[dot(n, b) for b in pointed_basis] for n in reduced]
    ys = _extreme_rays_pointed(M, t)
    rays = []
    for y in ys:
        z = [sum(yi * b[i] for yi, b in zip(y, pointed_basis)) for i in range(len(sub))]
        x = tuple(sum(zj * s[i] for zj, s in zip(z, sub)) for i in range(dim))
        rays.append(_project_off(x, lines))
    return tuple(sorted(set(rays))), lines


class Cone:
    """A rational polyhedral cone in R^dim, canonically represented."""

    __slots__ = ("dim", "rays", "lines", "_hrep")

    def __init__(self, dim, rays, lines, hrep=None):
        self.dim = dim
        self.rays = tuple(rays)
        self.lines = tuple(lines)
        self._hrep = hrep

    @classmethod
    def from_rays(cls, generators, dim=None, lines=()):
        gens = [tuple(g) for g in generators if any(g)]
        if dim is None:
            if gens:
                dim = len(gens[0])
            elif lines:
                dim = len(tuple(lines)[0])
            else:
                raise ValueError("ambient dimension cannot be inferred")
        ineqs, eqs = _rays_from_halfspaces(gens, [tuple(l) for l in lines], dim)
        rays, lin = _rays_from_halfspaces(ineqs, eqs, dim)
        return cls(dim, rays, lin, hrep=(ineqs, eqs))

    @classmethod
    def from_inequalities(cls, normals, equations=(), dim=None):
        normals = [tuple(n) for n in normals if any(n)]
        equations = [tuple(e) for e in equations if any(e)]
        if dim is None:
            if normals:
                dim = len(normals[0])
            elif equations:
                dim = len(equations[0])
            else:
                raise ValueError("ambient dimension cannot be inferred")
        rays, lin = _rays_from_halfspaces(normals, equations, dim)
        return cls(dim, rays, lin)

    @classmethod
    def zero(cls, dim):
        return cls(dim, (), ())

    @classmethod
    def full_space(cls, dim):
        return cls(dim, (), tuple(tuple(r) for r in identity(dim)))

    @classmethod
    def orthant(cls, dim):
        return cls.from_rays([tuple(r) for r in identity(dim)], dim=dim)

    @property
    def hrep(self):
        if self._hrep is None:
            self._hrep = _rays_from_halfspaces(self.rays, self.lines, self.dim)
        return self._hrep

    @property
    def ineqs(self):
        return self.hrep[0]

    @property
    def eqs(self):
        return self.hrep[1]

    def dual(self):
        ineqs, eqs = self.hrep
        return Cone(self.dim, ineqs, eqs, hrep=(self.rays, self.lines))

    def dimension(self):
        gens = list(self.rays) + list(self.lines)
        return rank(gens) if gens else 0

    def is_full_dimensional(self):
        return self.dimension() == self.dim

    def is_zero(self):
        return not self.rays and not self.lines

    def intersect(self, other):
        if self.dim != other.dim:
            raise ValueError("ambient dimension mismatch")
        return Cone.from_inequalities(
            self.ineqs + other.ineqs, self.eqs + other.eqs, dim=self.dim
        )

    def contains_vector(self, v):
        ineqs, eqs = self.hrep
        return all(dot(n, v) >= 0 for n in ineqs) and all(dot(e, v) == 0 for e in eqs)

    def contains(self, other):
        """Whether ``other`` (a cone) is contained in this cone."""
        ineqs, eqs = self.hrep
        for r in other.rays:
            if not self.contains_vector(r):
                return False
        for l in other.lines:
            if any(dot(n, l) != 0 for n in ineqs) or any(dot(e, l) != 0 for e in eqs):
                return False
        return True

    def relative_interior_point(self):
        """An integer point in the relative interior (the zero vector for {0})."""
        point = [0] * self.dim
        for r in self.rays:
            point = [a + b for a, b in zip(point, r)]
        return tuple(point)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (self.dim, self.rays, self.lines) == (other.dim, other.rays, other.lines)

    def __hash__(self):
        return hash((self.dim, self.rays, self.lines))

    def __repr__(self):
        return f"Cone(dim={self.dim}, rays={list(self.rays)}, lines={list(self.lines)})"


def dual_cone(c):
    """The cone of linear functionals nonnegative on ``c``."""
    return c.dual()


def intersect(c1, c2):
    return c1.intersect(c2)


def cone_dim(c):
    """Dimension of the linear span of the cone."""
    return c.dimension()


def interior_point(c):
    """A rational point strictly inside every facet of a full-dimensional cone."""
    if not c.is_full_dimensional():
        raise ValueError("cone is not full-dimensional")
    return c.relative_interior_point()


def interiors_disjoint(c1, c2):
    """Whether two full-dimensional simplicial cones have disjoint interiors.

    For closed full-dimensional convex cones this is equivalent to their
    intersection not being full-dimensional.
    """
    if c1.dim != c2.dim:
        raise ValueError("ambient dimension mismatch")
    for c in (c1, c2):
        if not c.is_full_dimensional():
            raise ValueError("cone is not full-dimensional")
        if c.lines or len(c.rays) != c.dim:
            raise ValueError("cone is not simplicial")
    return c1.intersect(c2).dimension() < c1.dim


def simplicial_cone_volume(vectors):
    """Normalized volume |det| of the simplicial cone on the given generators."""
    return abs(det([list(v) for v in vectors]))
