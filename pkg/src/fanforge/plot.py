"""SVG rendering of the standard-simplex section of a rank-3 secondary fan.

Every ray of a cone inside the nonnegative orthant of R^3 meets the
standard simplex in a single point, so the effective cone, the movable
cone, the chamber walls and the nef chambers can all be drawn as a plane
figure.  The geometry is computed in exact rationals; floats appear only
when formatting coordinates, with a fixed precision, so the output bytes
are reproducible.
"""

from fractions import Fraction
from functools import cmp_to_key

from .gale import effective_cone, movable_cone, nef_cone
from .intmat import rank


class UnsupportedRank(ValueError):
    """Simplex sections are drawn only for rank-3 weight matrices."""


_HEIGHT = 0.8660254037844386  # sqrt(3)/2, display only
_SIZE = 640.0
_MARGIN = 40.0


def _section(ray):
    total = sum(ray)
    if total <= 0:
        raise ValueError(f"ray {ray} does not meet the simplex")
    return (Fraction(ray[0], total), Fraction(ray[1], total), Fraction(ray[2], total))


def _planar(point):
    x = float(point[1]) + 0.5 * float(point[2])
    y = _HEIGHT * float(point[2])
    return (_MARGIN + _SIZE * x, _MARGIN + _SIZE * (_HEIGHT - y) / _HEIGHT * 0.95)


def _fmt(v):
    return f"{v:.2f}"


def _sorted_polygon(points):
    """Convex-position points ordered counterclockwise around their centroid, exactly."""
    n = len(points)
    cx = sum(p[0] for p in points) / n
    cy = sum(p[1] for p in points) / n
    cz = sum(p[2] for p in points) / n

    def plane(p):
        return (p[1] - cy + (p[2] - cz) / 2, p[2] - cz)

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def compare(p, q):
        u, v = plane(p), plane(q)
        hu, hv = half(u), half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        cross = u[0] * v[1] - u[1] * v[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(points, key=cmp_to_key(compare))


def _polygon_element(points, fill, stroke, width, opacity="1"):
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    return (
        f'<polygon points="{coords}" fill="{fill}" stroke="{stroke}" '
        f'stroke-width="{width}" fill-opacity="{opacity}"/>'
    )


def secondary_fan_svg(Q, fans):
    """An SVG picture of the simplex section of the secondary fan data.

    ``fans`` supplies the nef chambers: projective fans are labelled in
    the canonical order of their chambers' interior points, the nef rays
    of non-projective fans are marked as points.
    """
    if Q.r != 3:
        raise UnsupportedRank(f"rank is {Q.r}, expected 3")
    eff = effective_cone(Q)
    mov = movable_cone(Q)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{int(_SIZE + 2 * _MARGIN)}" height="{int(_SIZE * 0.95 + 2 * _MARGIN)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    simplex = [_planar(p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    parts.append(_polygon_element(simplex, "none", "#bbbbbb", "1"))

    eff_pts = [_planar(p) for p in _sorted_polygon([_section(r) for r in eff.rays])]
    parts.append(_polygon_element(eff_pts, "#f2f2ff", "#333399", "1.5", opacity="0.6"))

    if mov.dimension() == 3:
        mov_pts = [
            _planar(p) for p in _sorted_polygon([_section(r) for r in mov.rays])
        ]
        parts.append(
            _polygon_element(mov_pts, "#e0f0e0", "#338833", "1.5", opacity="0.6")
        )

    for i in range(1, Q.m + 1):
        for j in range(i + 1, Q.m + 1):
            cols = [Q.column(i), Q.column(j)]
            if rank(cols) != 2:
                continue
            a = _planar(_section(cols[0]))
            b = _planar(_section(cols[1]))
            parts.append(
                f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" '
                f'y2="{_fmt(b[1])}" stroke="#999999" stroke-width="0.7"/>'
            )

    chambers = []
    markers = []
    for fan in fans:
        nef = nef_cone(fan, Q)
        d = nef.dimension()
        if d == 3:
            chambers.append((nef.relative_interior_point(), nef))
        elif d == 1:
            markers.append(nef.rays[0])
    chambers.sort(key=lambda t: t[0])
    for label, (_, nef) in enumerate(chambers, start=1):
        pts = _sorted_polygon([_section(r) for r in nef.rays])
        planar = [_planar(p) for p in pts]
        parts.append(_polygon_element(planar, "none", "#cc6633", "1"))
        cx = sum(p[0] for p in planar) / len(planar)
        cy = sum(p[1] for p in planar) / len(planar)
        parts.append(
            f'<text class="chamber" x="{_fmt(cx)}" y="{_fmt(cy)}" '
            f'font-size="16" text-anchor="middle" fill="#aa3311">{label}</text>'
        )
    for ray in sorted(set(markers)):
        x, y = _planar(_section(ray))
        parts.append(
            f'<circle class="nef-marker" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" '
            f'fill="#aa3311"/>'
        )

    for j in range(1, Q.m + 1):
        x, y = _planar(_section(Q.column(j)))
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#333399"/>')
        parts.append(
            f'<text class="column" x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
            f'font-size="13" fill="#333399">q{j}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
