"""Fan matrices and exhaustive enumeration of complete simplicial fans.

A fan matrix is an integer n x m matrix whose columns are the ray
generators; ``enumerate_sf`` finds every complete simplicial fan whose
1-skeleton uses *all* the columns, by matching minimal full-dimensional
cones along shared facets and keeping the collections in which every
facet is shared by exactly one cone on each side.

Column indices are 1-based throughout the public interface, matching the
usual mathematical presentation of such data.
"""

from itertools import combinations
from typing import NamedTuple

from .cones import Cone, interiors_disjoint
from .intmat import (
    det,
    dot,
    integer_kernel_basis,
    primitive,
    rank,
    smith_invariants,
    solve_rational,
)


class AxiomViolation(ValueError):
    """A matrix fails one of the fan-matrix axioms (a-f)."""

    def __init__(self, axiom, message, witness=None):
        super().__init__(f"axiom ({axiom}): {message}")
        self.axiom = axiom
        self.witness = witness


class FanMatrix:
    """A validated fan matrix: n x m, full rank, complete, primitive columns."""

    __slots__ = ("rows", "n", "m", "r", "is_cf")

    def __init__(self, rows, is_cf):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        self.m = len(self.rows[0])
        self.r = self.m - self.n
        self.is_cf = is_cf

    def column(self, j):
        """The j-th column (1-based) as a tuple."""
        return tuple(row[j - 1] for row in self.rows)

    @property
    def columns(self):
        return tuple(self.column(j) for j in range(1, self.m + 1))

    def submatrix_columns(self, indices):
        """Rows of the submatrix on the given 1-based column indices."""
        return [[row[j - 1] for j in indices] for row in self.rows]

    def cone_of(self, indices):
        return Cone.from_rays([self.column(j) for j in indices], dim=self.n)

    def __eq__(self, other):
        return isinstance(other, FanMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"FanMatrix({[list(r) for r in self.rows]})"


def validate_fan_matrix(rows):
    """Check the fan-matrix axioms and return a FanMatrix.

    Raises AxiomViolation naming the failed axiom:
      a) full rank n;
      b) no zero column;
      c) no column is a positive multiple of another;
      d) the columns positively span the whole space;
      e) every column is primitive (gcd of entries 1).
    The CF flag records whether the columns span the full integer lattice
    (all Smith invariants 1).
    """
    rows = [tuple(r) for r in rows]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must be nonempty and of equal length")
    n = len(rows)
    m = len(rows[0])
    cols = [tuple(row[j] for row in rows) for j in range(m)]
    if rank(rows) != n:
        raise AxiomViolation("a", f"rank is {rank(rows)}, expected {n}")
    for j, c in enumerate(cols):
        if not any(c):
            raise AxiomViolation("b", f"column {j + 1} is zero", witness=j + 1)
    oriented = [primitive(c) for c in cols]
    for i in range(m):
        for j in range(i + 1, m):
            if oriented[i] == oriented[j]:
                raise AxiomViolation(
                    "c",
                    f"column {j + 1} is a positive multiple of column {i + 1}",
                    witness=(i + 1, j + 1),
                )
    span = Cone.from_rays(cols, dim=n)
    if span.dimension() != n or not span.dual().is_zero():
        raise AxiomViolation("d", "columns do not positively span the whole space")
    for j, c in enumerate(cols):
        if primitive(c) != c:
            raise AxiomViolation("e", f"column {j + 1} is not primitive", witness=j + 1)
    is_cf = all(d == 1 for d in smith_invariants(rows))
    return FanMatrix(rows, is_cf)


class Fan:
    """A complete simplicial fan, stored as its maximal cones' column index sets."""

    __slots__ = ("cones", "matrix")

    def __init__(self, cones, matrix):
        self.cones = tuple(sorted(tuple(sorted(c)) for c in cones))
        self.matrix = matrix

    def rays_used(self):
        used = set()
        for c in self.cones:
            used.update(c)
        return tuple(sorted(used))

    def cone_geometry(self, indices):
        return self.matrix.cone_of(indices)

    def validate(self):
        """Re-check the fan invariants independently of how the fan was built.

        Raises ValueError on: a degenerate maximal cone, missing ray
        coverage, a facet not shared by exactly one cone on each side, or
        two maximal cones with overlapping interiors.
        """
        V = self.matrix
        n = V.n
        for c in self.cones:
            if len(c) != n or det(V.submatrix_columns(c)) == 0:
                raise ValueError(f"maximal cone {c} is not simplicial of full dimension")
        if self.rays_used() != tuple(range(1, V.m + 1)):
            raise ValueError("1-skeleton does not use every column")
        facets = oriented_facets(self.cones, V)
        for f, data in facets.items():
            if len(data.plus) != 1 or len(data.minus) != 1:
                raise ValueError(f"facet {f} is not matched one-to-one: {data}")
        geoms = [self.cone_geometry(c) for c in self.cones]
        for a, b in combinations(range(len(geoms)), 2):
            if not interiors_disjoint(geoms[a], geoms[b]):
                raise ValueError(
                    f"cones {self.cones[a]} and {self.cones[b]} have overlapping interiors"
                )

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.cones == other.cones and self.matrix.rows == other.matrix.rows

    def __hash__(self):
        return hash((self.cones, self.matrix.rows))

    def __repr__(self):
        return f"Fan({[list(c) for c in self.cones]})"


def minimal_cones(V):
    """All minimal full-dimensional simplicial cones on the columns of V.

    A size-n index set qualifies when its columns are independent and no
    other column of V lies in the cone they span.
    """
    result = []
    for I in combinations(range(1, V.m + 1), V.n):
        if det(V.submatrix_columns(I)) == 0:
            continue
        sub = V.submatrix_columns(I)
        contains_other = False
        for j in range(1, V.m + 1):
            if j in I:
                continue
            coeffs = solve_rational(sub, V.column(j))
            if coeffs is not None and all(c >= 0 for c in coeffs):
                contains_other = True
                break
        if not contains_other:
            result.append(I)
    return tuple(result)


class OrientedFacet(NamedTuple):
    indices: tuple
    normal: tuple
    plus: tuple
    minus: tuple


def facet_normal(facet, V):
    """Primitive normal of the hyperplane spanned by the facet's columns.

    The sign is fixed so that the first nonzero coordinate is positive.
    """
    rows = [V.column(j) for j in facet]
    kernel = integer_kernel_basis(rows)
    if len(kernel) != 1:
        raise ValueError(f"facet {facet} does not span a hyperplane")
    return primitive(kernel[0], orient=True)


def oriented_facets(cone_sets, V):
    """Facet incidence data for a collection of simplicial full cones.

    Returns a dict mapping each facet (a sorted index tuple of size n-1) to
    an OrientedFacet carrying its normal and the cones on each side.
    """
    normals = {}
    plus = {}
    minus = {}
    for I in cone_sets:
        for drop in I:
            f = tuple(j for j in I if j != drop)
            if f not in normals:
                normals[f] = facet_normal(f, V)
            side = dot(normals[f], V.column(drop))
            if side > 0:
                plus.setdefault(f, []).append(I)
            elif side < 0:
                minus.setdefault(f, []).append(I)
            else:
                raise ValueError(f"degenerate facet {f} of cone {I}")
    return {
        f: OrientedFacet(f, normals[f], tuple(sorted(plus.get(f, ()))),
                         tuple(sorted(minus.get(f, ()))))
        for f in sorted(normals)
    }


def _match_collections(cones, facets):
    """All subsets of ``cones`` in which every incident facet is matched 1-1.

    Backtracking over in/out decisions per cone with constraint
    propagation: once a side of a facet holds a chosen cone, the other
    side must end up with exactly one chosen cone and every other
    candidate on the full side is excluded.
    """
    index = {c: i for i, c in enumerate(cones)}
    sides = []
    for f in sorted(facets):
        data = facets[f]
        sides.append((tuple(index[c] for c in data.plus),
                      tuple(index[c] for c in data.minus)))

    results = []
    UNDECIDED, IN, OUT = 0, 1, -1

    def propagate(status):
        changed = True
        while changed:
            changed = False
            for plus, minus in sides:
                for mine, theirs in ((plus, minus), (minus, plus)):
                    picked = [i for i in mine if status[i] == IN]
                    if len(picked) > 1:
                        return False
                    if picked:
                        for i in mine:
                            if status[i] == UNDECIDED:
                                status[i] = OUT
                                changed = True
                        other_in = [i for i in theirs if status[i] == IN]
                        if len(other_in) > 1:
                            return False
                        if not other_in:
                            free = [i for i in theirs if status[i] == UNDECIDED]
                            if not free:
                                return False
                            if len(free) == 1:
                                status[free[0]] = IN
                                changed = True
        return True

    def admissible(status):
        for plus, minus in sides:
            p = sum(1 for i in plus if status[i] == IN)
            q = sum(1 for i in minus if status[i] == IN)
            if (p, q) not in ((0, 0), (1, 1)):
                return False
        return True

    def search(status):
        if not propagate(status):
            return
        try:
            pick = status.index(UNDECIDED)
        except ValueError:
            if admissible(status):
                chosen = tuple(cones[i] for i in range(len(cones)) if status[i] == IN)
                if chosen:
                    results.append(chosen)
            return
        for choice in (IN, OUT):
            trial = list(status)
            trial[pick] = choice
            search(trial)

    search([UNDECIDED] * len(cones))
    return sorted(set(results))


def _pairwise_disjoint(cone_sets, V, cache):
    geoms = {}

    def geom(c):
        if c not in geoms:
            geoms[c] = V.cone_of(c)
        return geoms[c]

    for a, b in combinations(cone_sets, 2):
        key = (a, b)
        if key not in cache:
            cache[key] = interiors_disjoint(geom(a), geom(b))
        if not cache[key]:
            return False
    return True


def enumerate_pseudofans(V):
    """Collections of minimal cones passing the facet-matching and ray-coverage tests.

    These are the candidate fans before the interior-overlap check; the
    conjecture under test is that the check never rejects any of them.
    """
    cones = minimal_cones(V)
    facets = oriented_facets(cones, V)
    full = tuple(range(1, V.m + 1))
    collections = _match_collections(cones, facets)
    out = []
    for chosen in collections:
        used = sorted({j for c in chosen for j in c})
        if tuple(used) == full:
            out.append(chosen)
    return tuple(out)


def enumerate_sf(V, verify_overlap=True):
    """Every complete simplicial fan whose rays are exactly the columns of V.

    With ``verify_overlap`` (the default) candidate collections must also
    have pairwise disjoint cone interiors; switching it off trusts the
    facet-matching conditions alone.
    """
    cache = {}
    fans = []
    for chosen in enumerate_pseudofans(V):
        if verify_overlap and not _pairwise_disjoint(chosen, V, cache):
            continue
        fans.append(Fan(chosen, V))
    return tuple(sorted(fans, key=lambda f: f.cones))


def pseudofan_conjecture_report(V):
    """Empirically test whether every pseudofan on V is a genuine fan.

    Returns a report dict; any counterexample (a pseudofan whose cones
    overlap) is listed as a machine-readable certificate.
    """
    cache = {}
    pseudo = enumerate_pseudofans(V)
    counterexamples = [
        chosen for chosen in pseudo if not _pairwise_disjoint(chosen, V, cache)
    ]
    return {
        "matrix": [list(r) for r in V.rows],
        "pseudofans": len(pseudo),
        "fans": len(pseudo) - len(counterexamples),
        "counterexamples": [[list(c) for c in chosen] for chosen in counterexamples],
    }
