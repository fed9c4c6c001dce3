from fractions import Fraction
from functools import cmp_to_key

import pytest

from fanforge.cones import Cone, cone_dim, intersect
from fanforge.fans import enumerate_sf, validate_fan_matrix
from fanforge.gale import (
    WeightMatrix,
    anticanonical_class,
    bunch_of_fan,
    cf_cover,
    effective_cone,
    family_matrices,
    gale_dual,
    is_projective,
    movable_cone,
    nef_cone,
    weight_matrix_from_rows,
)
from fanforge.intmat import (
    integer_kernel_basis,
    lattices_equal,
    mat_mul,
    primitive,
    transpose,
)

from conftest import BH_Q_ROWS, DEF21_Q_ROWS, X47_Q_ROWS, random_fan_matrices


def test_gale_dual_bh(BH):
    Q = gale_dual(BH)
    assert all(x >= 0 for row in Q.rows for x in row)
    assert lattices_equal(Q.rows, BH_Q_ROWS)
    assert mat_mul(BH.rows, transpose(Q.rows)) == [[0] * 3 for _ in range(3)]


def test_gale_dual_x47(X47):
    Q = gale_dual(X47)
    assert lattices_equal(Q.rows, X47_Q_ROWS)
    assert all(x >= 0 for row in Q.rows for x in row)


def test_gale_dual_p2(P2):
    assert gale_dual(P2).rows == ((1, 1, 1),)


def test_weight_matrix_validates():
    with pytest.raises(ValueError):
        WeightMatrix([[1, -1, 0]], source=validate_fan_matrix([[1, 0, -1], [0, 1, -1]]))


def test_cf_cover_bh(BH):
    cover = cf_cover(BH)
    assert cover.is_cf
    assert lattices_equal(
        integer_kernel_basis(cover.rows), integer_kernel_basis(BH.rows)
    )


def test_cf_cover_p2(P2):
    cover = cf_cover(P2)
    assert lattices_equal(integer_kernel_basis(cover.rows), [(1, 1, 1)])


def test_cf_cover_weighted_style():
    V = validate_fan_matrix([[1, 0, -2], [0, 1, -3]])
    assert integer_kernel_basis(V.rows) == ((2, 3, 1),)
    cover = cf_cover(V)
    assert cover.is_cf
    assert integer_kernel_basis(cover.rows) == ((2, 3, 1),)


def test_gale_dual_of_cover_is_gale_dual(BH, X47):
    for V in (BH, X47):
        cover = cf_cover(V)
        assert lattices_equal(gale_dual(cover).rows, gale_dual(V).rows)


def test_bunch_p2(P2):
    Q = gale_dual(P2)
    (fan,) = enumerate_sf(P2)
    bunch = bunch_of_fan(fan, Q)
    assert len(bunch) == 3
    for cone in bunch:
        assert cone.rays == ((1,),)
    assert cone_dim(nef_cone(fan, Q)) == 1
    assert is_projective(fan, Q)


def test_bunch_pairwise_interiors_meet(BH):
    Q = gale_dual(BH)
    for fan in enumerate_sf(BH):
        bunch = bunch_of_fan(fan, Q)
        for i, a in enumerate(bunch):
            assert cone_dim(a) == Q.r
            for b in bunch[i + 1:]:
                assert cone_dim(intersect(a, b)) == Q.r


def test_bunch_column_condition(BH):
    Q = gale_dual(BH)
    for fan in enumerate_sf(BH):
        bunch = bunch_of_fan(fan, Q)
        for i in range(1, Q.m + 1):
            others = Q.cone_of_columns([j for j in range(1, Q.m + 1) if j != i])
            assert any(others.contains(c) for c in bunch)


def test_nonprojective_bh_nef_is_anticanonical_ray(BH):
    Q = WeightMatrix(BH_Q_ROWS, source=BH)
    fans = enumerate_sf(BH)
    nonproj = [f for f in fans if not is_projective(f, Q)]
    assert len(nonproj) == 2
    for fan in nonproj:
        nef = nef_cone(fan, Q)
        assert nef.rays == ((1, 1, 1),)
        assert nef.lines == ()
    assert primitive(anticanonical_class(Q)) == (1, 1, 1)
    assert anticanonical_class(Q) == (3, 3, 3)


def test_chamber_intersection_is_anticanonical_ray(BH):
    Q = WeightMatrix(BH_Q_ROWS, source=BH)
    current = Cone.full_space(3)
    for fan in enumerate_sf(BH):
        if is_projective(fan, Q):
            current = intersect(current, nef_cone(fan, Q))
    assert current.rays == ((1, 1, 1),)
    assert current.lines == ()


def test_def21_unique_nonprojective_has_trivial_nef(DEF21):
    Q = WeightMatrix(DEF21_Q_ROWS, source=DEF21)
    fans = enumerate_sf(DEF21)
    nonproj = [f for f in fans if not is_projective(f, Q)]
    assert len(nonproj) == 1
    assert nef_cone(nonproj[0], Q).is_zero()


def test_projectivity_counts(P2, X47, BH, DEF21):
    for V, expected in ((P2, (1, 1)), (X47, (3, 3)), (BH, (8, 6)), (DEF21, (8, 7))):
        Q = gale_dual(V)
        fans = enumerate_sf(V)
        assert len(fans) == expected[0]
        assert sum(is_projective(f, Q) for f in fans) == expected[1]


def test_movable_cone_p2(P2):
    Q = gale_dual(P2)
    assert movable_cone(Q) == effective_cone(Q)
    assert movable_cone(Q).rays == ((1,),)


def test_chambers_inside_movable(BH, DEF21):
    for V in (BH, DEF21):
        Q = gale_dual(V)
        mov = movable_cone(Q)
        eff = effective_cone(Q)
        assert eff.contains(mov)
        for fan in enumerate_sf(V):
            nef = nef_cone(fan, Q)
            assert mov.contains(nef)
            assert eff.contains(mov)


def test_family_matrices_reproduce_bh(BH):
    Q, V = family_matrices(1, 1)
    assert [list(r) for r in Q.rows] == BH_Q_ROWS == [
        [1, 1, 0, 0, 1, 0],
        [0, 1, 1, 1, 0, 0],
        [0, 0, 0, 1, 1, 1],
    ]
    assert V.rows == BH.rows


def test_family_matrices_deformed(DEF21):
    Q, V = family_matrices(2, 1)
    assert Q.column(4) == (0, 1, 2)
    assert V.rows == DEF21.rows
    assert [list(r) for r in Q.rows] == DEF21_Q_ROWS


def test_family_matrices_general_member():
    Q, V = family_matrices(3, 2)
    assert mat_mul(V.rows, transpose(Q.rows)) == [[0] * 3 for _ in range(3)]
    assert lattices_equal(Q.rows, integer_kernel_basis(V.rows))
    assert V.is_cf is not None


def test_family_matrices_rejects_bad_parameters():
    with pytest.raises(ValueError):
        family_matrices(2, 4)
    with pytest.raises(ValueError):
        family_matrices(0, 1)


def test_weight_matrix_from_rows(BH):
    Q, V = weight_matrix_from_rows(BH_Q_ROWS)
    assert lattices_equal(integer_kernel_basis(Q.rows), V.rows)
    assert lattices_equal(integer_kernel_basis(V.rows), Q.rows)


def test_gale_dual_random_nonnegative():
    for V in random_fan_matrices(8, seed=55):
        Q = gale_dual(V)
        assert all(x >= 0 for row in Q.rows for x in row)
        assert lattices_equal(Q.rows, integer_kernel_basis(V.rows))


# ---- exact simplex-section area accounting (rank 3 only) ----


def _section(ray):
    s = sum(ray)
    assert s > 0
    return (Fraction(ray[0], s), Fraction(ray[1], s), Fraction(ray[2], s))


def _plane(p):
    # exact affine chart of the simplex plane
    return (p[1] + p[2] / 2, p[2])


def _polygon_area(points):
    pts = [_plane(_section(r)) for r in points]
    n = len(pts)
    cx = sum(p[0] for p in pts) / n
    cy = sum(p[1] for p in pts) / n

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def compare(p, q):
        u = (p[0] - cx, p[1] - cy)
        v = (q[0] - cx, q[1] - cy)
        hu, hv = half(u), half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        cross = u[0] * v[1] - u[1] * v[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    pts = sorted(pts, key=cmp_to_key(compare))
    area = Fraction(0)
    for i in range(n):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        area += x1 * y2 - x2 * y1
    return abs(area) / 2


def test_chambers_tile_movable_cone(BH, DEF21):
    """Exact area accounting on the simplex section: the nef chambers of the
    projective fans have disjoint interiors and fill the movable cone."""
    for V in (BH, DEF21):
        Q = gale_dual(V)
        chambers = []
        for fan in enumerate_sf(V):
            nef = nef_cone(fan, Q)
            if cone_dim(nef) == 3:
                chambers.append(nef)
        for i, a in enumerate(chambers):
            for b in chambers[i + 1:]:
                assert cone_dim(intersect(a, b)) < 3
        total = sum(_polygon_area(c.rays) for c in chambers)
        assert total == _polygon_area(movable_cone(Q).rays)
