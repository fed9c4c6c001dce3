import random

import pytest

from fanforge.binomials import (
    BinomialIdeal,
    NonGenericWeight,
    TermOrder,
    buchberger,
    ideals_equal,
    normal_form,
    positive_part,
    negative_part,
)
from fanforge.cones import Cone
from fanforge.fans import validate_fan_matrix
from fanforge.gale import gale_dual
from fanforge.toric import (
    groebner_region,
    groebner_region_three_ways,
    min_nonminima_check,
    positive_kernel_vector,
    toric_ideal,
)

from conftest import BH_V_ROWS, P2_ROWS, X47_V_ROWS, random_fan_matrices

# the published generating sets
PRINTED_X47 = BinomialIdeal(7, [
    (1, 1, -1, -1, 0, 0, 0),   # x1 x2 - x3 x4
    (0, 0, 0, 0, 1, 1, 1),     # x5 x6 x7 - 1
    (0, 0, 1, 1, 1, -1, -1),   # x3 x4 x5 - x6 x7
    (0, 0, -1, -1, 0, 2, 2),   # x6^2 x7^2 - x3 x4
])
PRINTED_BH = BinomialIdeal(6, [
    (1, 0, -1, -1, 1, 0),      # x1 x5 - x3 x4
    (0, 1, 1, 0, -1, -1),      # x2 x3 - x5 x6
    (1, 1, 0, -1, 0, -1),      # x1 x2 - x4 x6
    (0, 0, 0, 1, 1, 1),        # x4 x5 x6 - 1
    (1, 0, -1, 0, 2, 1),       # x1 x5^2 x6 - x3
])


def saturation_oracle(V):
    """Independent route to the toric ideal: lattice-basis ideal saturated
    variable by variable with an auxiliary Rabinowitsch variable."""
    from fanforge.intmat import integer_kernel_basis

    m = V.m
    vectors = [tuple(r) for r in integer_kernel_basis(V.rows)]
    for i in range(m):
        extended = [v + (0,) for v in vectors]
        sat = tuple(1 if k == i else 0 for k in range(m)) + (1,)
        extended.append(sat)  # x_i * t - 1
        order = TermOrder([0] * m + [1])
        gb = buchberger(BinomialIdeal(m + 1, extended), order)
        vectors = [
            tuple(l - t for l, t in zip(lead[:m], trail[:m]))
            for lead, trail in gb
            if lead[m] == 0 and trail[m] == 0
        ]
    return BinomialIdeal(m, vectors)


def test_toric_ideal_p2(P2):
    assert toric_ideal(P2).vectors == ((1, 1, 1),)


def test_toric_ideal_matches_printed_x47(X47):
    I = toric_ideal(X47)
    order = TermOrder([1] * 7)
    assert ideals_equal(I, PRINTED_X47, order)
    # mutual normal-form reduction to zero, both directions
    gb = buchberger(I, order)
    for lead, trail in PRINTED_X47.binomial_pairs():
        assert normal_form(lead, gb) == normal_form(trail, gb)
    gb_printed = buchberger(PRINTED_X47, order)
    for u in I.vectors:
        assert normal_form(positive_part(u), gb_printed) == normal_form(
            negative_part(u), gb_printed
        )


def test_toric_ideal_matches_printed_bh(BH):
    assert ideals_equal(toric_ideal(BH), PRINTED_BH, TermOrder([1] * 6))


def test_toric_ideal_against_saturation_oracle(P2, BH):
    for V in (P2, BH):
        I = toric_ideal(V)
        J = saturation_oracle(V)
        assert ideals_equal(I, J, TermOrder([1] * V.m))


def test_positive_kernel_vector(BH):
    p = positive_kernel_vector(BH)
    assert all(x > 0 for x in p)
    assert all(
        sum(r * x for r, x in zip(row, p)) == 0 for row in BH.rows
    )


def test_groebner_region_p2(P2):
    W = groebner_region(P2, gale_dual(P2))
    assert W == Cone.from_inequalities([(1, 1, 1)])


def test_groebner_region_triple_examples(P2, BH, X47, DEF21):
    for V in (P2, BH, X47, DEF21):
        w1, w2, w3 = groebner_region_three_ways(V, gale_dual(V))
        assert w1 == w2 == w3
        assert w1.contains(w2) and w2.contains(w3) and w3.contains(w1)


def test_groebner_region_contains_orthant(P2, BH, X47):
    for V in (P2, BH, X47):
        W = groebner_region(V, gale_dual(V))
        assert W.contains(Cone.orthant(V.m))


def test_min_nonminima_x47_golden_order(X47):
    I = toric_ideal(X47)
    # weight interior to the first golden cone (computed in test_binomials)
    order = TermOrder((13, 13, 12, 12, 3, 9, 9))
    assert min_nonminima_check(I, order, 6)


def test_min_nonminima_principal():
    ideal = BinomialIdeal(3, [(1, 1, 1)])
    assert min_nonminima_check(ideal, TermOrder([3, 1, 2]), 5)


def test_min_nonminima_bh_sampled_weights(BH):
    I = toric_ideal(BH)
    rng = random.Random(31)
    done = 0
    while done < 2:
        w = [rng.randint(1, 30) for _ in range(6)]
        try:
            assert min_nonminima_check(I, TermOrder(w), 5)
        except NonGenericWeight:
            continue
        done += 1


def test_min_nonminima_rejects_nongeneric(P2):
    I = toric_ideal(P2)
    with pytest.raises(NonGenericWeight):
        min_nonminima_check(I, TermOrder([0, 0, 0]), 4)


def test_groebner_region_random_matrices():
    for V in random_fan_matrices(5, seed=77):
        Q = gale_dual(V)
        w1, w2, w3 = groebner_region_three_ways(V, Q)
        assert w1 == w2 == w3
