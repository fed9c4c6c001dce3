"""Binomial ideals, weight term orders and a binomial-specialised Buchberger.

Monomials are exponent tuples.  A binomial x^a - x^b is handled as the
pair ``(a, b)``; inside a reduced Groebner basis the pair is *marked*,
``a`` being the initial term.  Ideal generators are kept in vector form
``u = a - b`` (supports disjoint), sign-normalised and sorted.
"""

from fractions import Fraction
from math import gcd

from .intmat import dot


class NotATermOrder(ValueError):
    """The weight makes some variable smaller than 1, so Buchberger cannot run."""


class NonGenericWeight(ValueError):
    """The weight ties on some Groebner-basis element; its initial ideal is not monomial."""


def positive_part(u):
    return tuple(x if x > 0 else 0 for x in u)


def negative_part(u):
    return tuple(-x if x < 0 else 0 for x in u)


def vector_of_pair(a, b):
    return tuple(x - y for x, y in zip(a, b))


def support(e):
    return frozenset(i for i, x in enumerate(e) if x)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sign_normalize(u):
    for x in u:
        if x > 0:
            return tuple(u)
        if x < 0:
            return tuple(-y for y in u)
    return None


class TermOrder:
    """A weight vector refined by the fixed lexicographic order x1 > x2 > ...

    Any rational weight gives a total order on monomials; it is a genuine
    term order (usable in Buchberger) exactly when no entry is negative.
    """

    __slots__ = ("nvars", "weight")

    def __init__(self, weight):
        weight = [Fraction(w) for w in weight]
        lcm = 1
        for w in weight:
            lcm = lcm * w.denominator // gcd(lcm, w.denominator)
        self.weight = tuple(int(w * lcm) for w in weight)
        self.nvars = len(self.weight)

    def weight_degree(self, e):
        return dot(self.weight, e)

    def key(self, e):
        return (dot(self.weight, e), e)

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def is_term_order(self):
        return all(w >= 0 for w in self.weight)

    def require_term_order(self):
        for i, w in enumerate(self.weight):
            if w < 0:
                raise NotATermOrder(f"x{i + 1} has negative weight {w}")

    def __repr__(self):
        return f"TermOrder({list(self.weight)})"


class MonomialIdeal:
    """A monomial ideal stored by its minimal generators (exponent tuples)."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars, generators):
        gens = sorted({tuple(g) for g in generators if any(g)})
        minimal = [
            g for g in gens
            if not any(divides(h, g) for h in gens if h != g)
        ]
        self.nvars = nvars
        self.gens = tuple(minimal)

    def contains(self, e):
        return any(divides(g, e) for g in self.gens)

    def radical(self):
        return MonomialIdeal(
            self.nvars, [tuple(1 if x else 0 for x in g) for g in self.gens]
        )

    def is_squarefree(self):
        return all(all(x <= 1 for x in g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (self.nvars, self.gens) == (other.nvars, other.gens)

    def __lt__(self, other):
        return (self.nvars, self.gens) < (other.nvars, other.gens)

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({[monomial_string(g) for g in self.gens]})"


class BinomialIdeal:
    """An ideal generated by pure-difference binomials, in exponent-vector form."""

    __slots__ = ("nvars", "vectors")

    def __init__(self, nvars, vectors):
        normalized = set()
        for u in vectors:
            s = _sign_normalize(u)
            if s is not None:
                normalized.add(s)
        self.nvars = nvars
        self.vectors = tuple(sorted(normalized))

    def binomial_pairs(self):
        return tuple((positive_part(u), negative_part(u)) for u in self.vectors)

    def __eq__(self, other):
        if not isinstance(other, BinomialIdeal):
            return NotImplemented
        return (self.nvars, self.vectors) == (other.nvars, other.vectors)

    def __hash__(self):
        return hash((self.nvars, self.vectors))

    def __repr__(self):
        return f"BinomialIdeal({[binomial_string(positive_part(u), negative_part(u)) for u in self.vectors]})"


def monomial_string(e, names=None):
    if not any(e):
        return "1"
    parts = []
    for i, x in enumerate(e):
        if x == 0:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if x == 1 else f"{name}^{x}")
    return "*".join(parts)


def binomial_string(lead, trail, names=None):
    return f"{monomial_string(lead, names)} - {monomial_string(trail, names)}"


def _orient(a, b, order):
    if a == b:
        return None
    return (a, b) if order.key(a) > order.key(b) else (b, a)


def _reduce_once(m, basis, skip=None):
    for idx, (lead, trail) in enumerate(basis):
        if idx == skip:
            continue
        if divides(lead, m):
            return tuple(x - l + t for x, l, t in zip(m, lead, trail))
    return None


def _reduce_pair(a, b, basis, order):
    """Fully reduce the binomial x^a - x^b modulo marked ``basis``; None if it dies."""
    while True:
        if a == b:
            return None
        if order.key(a) < order.key(b):
            a, b = b, a
        step = _reduce_once(a, basis)
        if step is not None:
            a = step
            continue
        step = _reduce_once(b, basis)
        if step is not None:
            b = step
            continue
        return (a, b)


def buchberger(ideal, order):
    """The reduced Groebner basis of a binomial ideal, as marked (lead, trail) pairs.

    The classical pair-completion loop with the coprime-lead criterion;
    binomials are closed under S-pairs and reduction, so everything stays
    a difference of two monomials.  The result is canonical (the reduced
    basis is unique for the order) and sorted.
    """
    order.require_term_order()
    basis = []
    seen = set()
    for a, b in ideal.binomial_pairs():
        g = _orient(a, b, order)
        if g and g not in seen:
            seen.add(g)
            basis.append(g)
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        (la, ta), (lb, tb) = basis[i], basis[j]
        if all(x == 0 or y == 0 for x, y in zip(la, lb)):
            continue  # coprime leads: S-pair reduces to zero
        lcm = tuple(max(x, y) for x, y in zip(la, lb))
        s1 = tuple(g - x + t for g, x, t in zip(lcm, la, ta))
        s2 = tuple(g - x + t for g, x, t in zip(lcm, lb, tb))
        red = _reduce_pair(s1, s2, basis, order)
        if red is None:
            continue
        g = _orient(*red, order)
        if g is None or g in seen:
            continue
        seen.add(g)
        basis.append(g)
        new = len(basis) - 1
        pairs.extend((k, new) for k in range(new))
    return _interreduce(basis, order)


def _interreduce(basis, order):
    basis = sorted(set(basis), key=lambda g: (order.key(g[0]), g))
    kept = []
    for g in basis:
        if not any(divides(h[0], g[0]) for h in kept):
            kept.append(g)
    reduced = []
    for lead, trail in kept:
        while True:
            step = None
            for other_lead, other_trail in kept:
                if other_lead != lead and divides(other_lead, trail):
                    step = tuple(
                        x - l + t for x, l, t in zip(trail, other_lead, other_trail)
                    )
                    break
            if step is None:
                break
            trail = step
        reduced.append((lead, trail))
    return tuple(sorted(reduced))


def normal_form(e, marked_basis):
    """The unique irreducible monomial obtained by rewriting x^e modulo a marked basis."""
    e = tuple(e)
    while True:
        for lead, trail in marked_basis:
            if divides(lead, e):
                e = tuple(x - l + t for x, l, t in zip(e, lead, trail))
                break
        else:
            return e


def reduces_to_zero(u, marked_basis):
    """Whether the binomial with exponent vector u reduces to zero modulo the basis."""
    return normal_form(positive_part(u), marked_basis) == normal_form(
        negative_part(u), marked_basis
    )


def ideals_equal(I, J, order):
    """Ideal equality via uniqueness of the reduced Groebner basis."""
    if I.nvars != J.nvars:
        return False
    return buchberger(I, order) == buchberger(J, order)


def initial_ideal(ideal, order):
    """The monomial initial ideal of a binomial ideal for a generic weight.

    Raises NonGenericWeight when some reduced-basis element has equal
    weight on both monomials (the weight lies on a wall).
    """
    gb = buchberger(ideal, order)
    return initial_ideal_of_marked_basis(gb, order, ideal.nvars)


def initial_ideal_of_marked_basis(gb, order, nvars):
    for lead, trail in gb:
        if order.weight_degree(lead) == order.weight_degree(trail):
            raise NonGenericWeight(
                f"weight ties on {binomial_string(lead, trail)}"
            )
    return MonomialIdeal(nvars, [lead for lead, _ in gb])
