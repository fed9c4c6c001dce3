"""Enumeration of projective fans through the Groebner fan of the toric ideal.

The toric ideal of a complete configuration is never homogeneous, so its
Groebner fan is only supported on the weight region.  The pipeline
therefore homogenises the ideal with an auxiliary variable, walks the
(complete) Groebner fan upstairs by crossing the facets of each Groebner
cone, drops the initial ideals containing a power of the auxiliary
variable or of any original variable, and converts each survivor into
the complete simplicial fan whose non-faces are the supports of its
generators.  Distinct initial ideals can land on the same fan; their
radicals then agree, being the face ideal of that fan.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from .binomials import (
    BinomialIdeal,
    MonomialIdeal,
    NonGenericWeight,
    TermOrder,
    buchberger,
    initial_ideal_of_marked_basis,
    support,
    vector_of_pair,
)
from .cones import Cone
from .fans import Fan
from .intmat import dot


class NotAFan(ValueError):
    """A monomial ideal whose face complex is not a complete simplicial fan."""


class GroebnerRecord:
    """A marked reduced basis, its monomial initial ideal and its closed weight cone."""

    __slots__ = ("reduced_gb", "initial", "cone")

    def __init__(self, reduced_gb, initial, cone):
        self.reduced_gb = reduced_gb
        self.initial = initial
        self.cone = cone

    def __repr__(self):
        return f"GroebnerRecord(initial={self.initial!r})"


def parallel_map(fn, items, threads):
    """Map preserving input order; with threads > 1 a thread pool is used.

    Results are merged in input order, so the output never depends on
    scheduling.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def homogenize(ideal):
    """The homogenisation of a binomial ideal, in one more variable.

    Each element of a reduced basis for a degree-compatible order is
    homogenised; for the *ideal* (rather than arbitrary generators) this
    is only valid on such a basis, which is why one is computed first.
    """
    order = TermOrder([1] * ideal.nvars)
    gb = buchberger(ideal, order)
    vectors = []
    for lead, trail in gb:
        d = max(sum(lead), sum(trail))
        h_lead = lead + (d - sum(lead),)
        h_trail = trail + (d - sum(trail),)
        vectors.append(vector_of_pair(h_lead, h_trail))
    return BinomialIdeal(ideal.nvars + 1, vectors)


def _reduced_gb_for_weight(HI, w):
    """Reduced basis of a homogeneous ideal for any integer weight, plus genericity.

    Adding a multiple of the all-ones vector never changes initial terms
    of homogeneous polynomials, so negative weights are shifted into the
    nonnegative orthant before running Buchberger.
    """
    shift = -min(w) if min(w) < 0 else 0
    order = TermOrder([x + shift for x in w])
    gb = buchberger(HI, order)
    generic = all(
        order.weight_degree(lead) != order.weight_degree(trail) for lead, trail in gb
    )
    return gb, generic


def _start_weight(HI):
    nvars = HI.nvars
    candidates = [list(range(nvars, 0, -1)), list(range(1, nvars + 1))]
    for w in candidates:
        gb, generic = _reduced_gb_for_weight(HI, w)
        if generic:
            return gb
    base = 2
    for _ in range(60):
        w = [base**i for i in range(nvars)]
        gb, generic = _reduced_gb_for_weight(HI, w)
        if generic:
            return gb
        base *= 2
    raise AssertionError("no generic start weight found")


def _groebner_cone(gb, nvars):
    normals = [vector_of_pair(lead, trail) for lead, trail in gb]
    return Cone.from_inequalities(normals, dim=nvars)


def _record_for(gb, nvars):
    order_free = MonomialIdeal(nvars, [lead for lead, _ in gb])
    return GroebnerRecord(gb, order_free, _groebner_cone(gb, nvars))


def _cross_facet(HI, record, normal):
    """The reduced basis of the neighbouring full cone across one facet.

    The crossing weight is K * p - normal for a relative-interior point p
    of the facet and growing K; it is accepted only when the cone found
    contains p, which pins it down as the unique full cone on the other
    side of that facet (so the traversal provably reaches every
    neighbour).
    """
    cone = record.cone
    on_facet = [r for r in cone.rays if dot(normal, r) == 0]
    p = [0] * cone.dim
    for r in on_facet:
        p = [a + b for a, b in zip(p, r)]
    others = [n for n in cone.ineqs if n != normal]
    K = 1
    for _ in range(80):
        w = [K * pi - ni for pi, ni in zip(p, normal)]
        if all(dot(n, w) > 0 for n in others):
            gb, generic = _reduced_gb_for_weight(HI, w)
            if generic and all(
                dot(vector_of_pair(lead, trail), p) >= 0 for lead, trail in gb
            ):
                return gb
        K *= 2
    raise AssertionError("facet crossing failed to find a generic weight")


def enumerate_initial_ideals(HI, threads=1):
    """All full-dimensional Groebner cones of a homogeneous binomial ideal.

    Breadth-first traversal of the (complete) Groebner fan: start from a
    generic weight, then repeatedly cross every facet of every known cone.
    Records are returned sorted by their marked bases, so the result does
    not depend on the start weight or on scheduling.
    """
    nvars = HI.nvars
    start = _start_weight(HI)
    visited = {start: _record_for(start, nvars)}
    frontier = [visited[start]]
    while frontier:
        tasks = []
        for record in frontier:
            for normal in record.cone.ineqs:
                tasks.append((record, normal))
        neighbours = parallel_map(lambda t: _cross_facet(HI, *t), tasks, threads)
        frontier = []
        for gb in neighbours:
            if gb not in visited:
                record = _record_for(gb, nvars)
                visited[gb] = record
                frontier.append(record)
    return tuple(visited[k] for k in sorted(visited))


def _drops_auxiliary(initial):
    aux = initial.nvars - 1
    return any(support(g) == {aux} for g in initial.gens)


def dehomogenize_record(record):
    """The initial ideal with the auxiliary variable set to 1, or None if dropped.

    A record is dropped when its initial ideal contains a power of the
    auxiliary variable: its cone carries no weight of the original ideal.
    Distinct surviving records can dehomogenise to the same ideal (they
    may differ only in generators divisible by the auxiliary variable).
    """
    initial = record.initial
    if _drops_auxiliary(initial):
        return None
    m = initial.nvars - 1
    return MonomialIdeal(m, [g[:m] for g in initial.gens])


def _has_variable_power(ideal):
    return any(len(support(g)) == 1 for g in ideal.gens)


def dehomogenize_and_filter(records):
    """Distinct surviving initial ideals of the original ideal, sorted.

    Records with an auxiliary-variable power are dropped, the rest are
    dehomogenised and minimalised, and ideals containing a power of an
    original variable (whose fans would miss a ray) are removed.
    """
    out = set()
    for record in records:
        ideal = dehomogenize_record(record)
        if ideal is not None and not _has_variable_power(ideal):
            out.add(ideal)
    return tuple(sorted(out))


def fan_from_initial_ideal(ideal, V):
    """The complete simplicial fan whose minimal non-faces carry the ideal's generators.

    An index set is a face exactly when it contains no generator's
    support; the maximal faces (size n) are the maximal cones.  The
    resulting collection is validated as a fan and the face complex is
    checked to be pure.
    """
    n, m = V.n, V.m
    supports = [support(g) for g in ideal.gens]
    if any(len(s) <= 1 for s in supports):
        raise NotAFan("the ideal contains a power of a single variable")

    def is_face(J):
        return not any(s <= J for s in supports)

    maximal = [
        tuple(sorted(j + 1 for j in J))
        for J in combinations(range(m), n)
        if is_face(frozenset(J))
    ]
    if not maximal:
        raise NotAFan("no full-dimensional faces")
    for size in list(range(n)) + [n + 1]:
        for J in combinations(range(m), size):
            fs = frozenset(J)
            if is_face(fs):
                covered = any(fs <= frozenset(j - 1 for j in M) for M in maximal)
                if size <= n and not covered:
                    raise NotAFan(f"face {J} is not contained in a maximal face")
                if size == n + 1:
                    raise NotAFan(f"face complex is not pure: {J}")
    fan = Fan(maximal, V)
    try:
        fan.validate()
    except ValueError as exc:
        raise NotAFan(str(exc)) from exc
    return fan


def stanley_reisner(fan):
    """The squarefree ideal of minimal non-faces of the fan's face complex."""
    m = fan.matrix.m
    max_faces = [frozenset(c) for c in fan.cones]

    def is_face(J):
        return any(J <= M for M in max_faces)

    gens = []
    for size in range(1, m + 1):
        for J in combinations(range(1, m + 1), size):
            fs = frozenset(J)
            if is_face(fs):
                continue
            if all(is_face(fs - {j}) for j in J):
                gens.append(tuple(1 if i + 1 in fs else 0 for i in range(m)))
    return MonomialIdeal(m, gens)


class PsfAnalysis:
    """Everything the Groebner-side pipeline produces for one fan matrix.

    ``records`` are all full Groebner cones of the homogenised ideal;
    ``surviving`` keeps the (record, dehomogenised ideal) pairs whose
    initial ideal has no auxiliary-variable power -- the reduced bases the
    pipeline counts; ``survivors`` are the distinct dehomogenised ideals
    that also contain no power of an original variable, each mapped to
    its fan.
    """

    __slots__ = (
        "ideal",
        "homogenized",
        "records",
        "surviving",
        "survivors",
        "fans",
        "fan_of_ideal",
        "radical_of_ideal",
    )

    def __init__(self, ideal, homogenized, records, surviving, survivors, fans,
                 fan_of_ideal, radical_of_ideal):
        self.ideal = ideal
        self.homogenized = homogenized
        self.records = records
        self.surviving = surviving
        self.survivors = survivors
        self.fans = fans
        self.fan_of_ideal = fan_of_ideal
        self.radical_of_ideal = radical_of_ideal

    def fans_of_surviving_bases(self):
        """The fan of each surviving reduced basis, in record order (None if rayless)."""
        return tuple(
            self.fan_of_ideal.get(ideal) for _, ideal in self.surviving
        )


def psf_analysis(V, threads=1):
    """Run the full Groebner pipeline on V and keep the intermediate data."""
    from .toric import toric_ideal

    ideal = toric_ideal(V)
    HI = homogenize(ideal)
    records = enumerate_initial_ideals(HI, threads=threads)
    surviving = tuple(
        (record, dehom)
        for record, dehom in ((r, dehomogenize_record(r)) for r in records)
        if dehom is not None
    )
    survivors = tuple(sorted(
        {ideal_ for _, ideal_ in surviving if not _has_variable_power(ideal_)}
    ))
    pairs = parallel_map(
        lambda s: (s, fan_from_initial_ideal(s, V)), survivors, threads
    )
    fan_of_ideal = dict(pairs)
    radical_of_ideal = {s: s.radical() for s in survivors}
    fans = tuple(sorted({fan for _, fan in pairs}, key=lambda f: f.cones))
    return PsfAnalysis(
        ideal, HI, records, surviving, survivors, fans, fan_of_ideal,
        radical_of_ideal
    )


def enumerate_psf(V, threads=1):
    """Every projective fan whose rays are exactly the columns of V."""
    return psf_analysis(V, threads=threads).fans


def sliced_weight_cone(record):
    """The record's cone of original-variable weights: slice at auxiliary weight 0.

    The all-ones vector lies in the cone's lineality (the ideal upstairs
    is homogeneous), so the slice still has the interior weights of the
    record, now with auxiliary coordinate 0, which is then dropped.
    """
    nvars = record.cone.dim
    aux = tuple(1 if i == nvars - 1 else 0 for i in range(nvars))
    hyper = Cone.from_inequalities([aux, tuple(-x for x in aux)], dim=nvars)
    sliced = record.cone.intersect(hyper)
    return Cone.from_rays(
        [r[: nvars - 1] for r in sliced.rays if any(r[: nvars - 1])],
        dim=nvars - 1,
        lines=[l[: nvars - 1] for l in sliced.lines if any(l[: nvars - 1])],
    )


def chamber_image(record, Q):
    """Image in the weight-class space of the record's sliced cone, via Q."""
    from .intmat import mat_vec

    sliced = sliced_weight_cone(record)
    rays = [tuple(mat_vec(Q.rows, r)) for r in sliced.rays]
    lines = [tuple(mat_vec(Q.rows, l)) for l in sliced.lines]
    return Cone.from_rays(
        [r for r in rays if any(r)], dim=Q.r, lines=[l for l in lines if any(l)]
    )


def initial_ideal_for_weight(ideal, w):
    """The initial ideal of a binomial ideal at a generic weight in its region.

    Nonnegative weights run Buchberger directly.  A weight with negative
    entries cannot be refined to a term order, so it is routed through
    the homogenisation: its extension by zero is applied upstairs (where
    shifting by the all-ones vector is harmless) and the auxiliary
    variable is substituted away afterwards.
    """
    w = list(w)
    if len(w) != ideal.nvars:
        raise ValueError("weight length mismatch")
    if min(w) >= 0:
        order = TermOrder(w)
        gb = buchberger(ideal, order)
        return initial_ideal_of_marked_basis(gb, order, ideal.nvars)
    HI = homogenize(ideal)
    gb, generic = _reduced_gb_for_weight(HI, w + [0])
    if not generic:
        raise NonGenericWeight("weight lies on a wall of the Groebner fan")
    record = _record_for(gb, HI.nvars)
    if _drops_auxiliary(record.initial):
        raise NonGenericWeight("weight is not in the interior of the weight region")
    m = record.initial.nvars - 1
    return MonomialIdeal(m, [g[:m] for g in record.initial.gens])
