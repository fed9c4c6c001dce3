"""Deterministic machine-readable reports for the analysis pipelines.

Reports are plain dicts of JSON-serialisable data with every list in a
canonical order, so rendering the same input twice (or with a different
thread count) produces byte-identical output.  Wall-clock timings are
deliberately kept out of the report body; the command line prints them
to stderr instead.
"""

import json

from .binomials import monomial_string
from .fans import enumerate_sf, pseudofan_conjecture_report
from .gale import (
    anticanonical_class,
    bunch_of_fan,
    cf_cover,
    effective_cone,
    gale_dual,
    movable_cone,
    nef_cone,
)
from .groebner_fan import chamber_image, parallel_map, psf_analysis, stanley_reisner
from .toric import groebner_region_three_ways


def _cone_dict(c):
    return {
        "dim": c.dimension(),
        "rays": [list(r) for r in c.rays],
        "lines": [list(l) for l in c.lines],
    }


def _ideal_dict(ideal):
    return {
        "generators": [list(g) for g in ideal.gens],
        "pretty": [monomial_string(g) for g in ideal.gens],
    }


def matrix_summary(V, Q):
    return {
        "V": [list(r) for r in V.rows],
        "Q": [list(r) for r in Q.rows],
        "n": V.n,
        "m": V.m,
        "r": V.r,
        "is_cf": V.is_cf,
    }


def validation_report(V):
    Q = gale_dual(V)
    cover = cf_cover(V)
    return {
        "command": "validate",
        "matrix": matrix_summary(V, Q),
        "axioms": {letter: True for letter in "abcde"},
        "cf_cover": [list(r) for r in cover.rows],
        "anticanonical": list(anticanonical_class(Q)),
    }


def fan_report(V, command, verify_overlap=True, fiber_bound=None, threads=1):
    """The full report for the sf / psf / compare commands.

    ``compare`` runs both pipelines and cross-checks them; ``sf`` and
    ``psf`` run one side only.  Every consistency check performed is
    recorded under "checks".
    """
    Q = gale_dual(V)
    report = {"command": command, "matrix": matrix_summary(V, Q)}
    checks = {}

    analysis = None
    fans = None
    if command in ("sf", "compare"):
        fans = enumerate_sf(V, verify_overlap=verify_overlap)
    if command in ("psf", "compare"):
        analysis = psf_analysis(V, threads=threads)
    if fans is None:
        fans = analysis.fans

    ideals_of_fan = {}
    if analysis is not None:
        for _, ideal in analysis.surviving:
            fan = analysis.fan_of_ideal.get(ideal)
            if fan is not None:
                ideals_of_fan.setdefault(fan.cones, []).append(ideal)

    def describe(fan):
        nef = nef_cone(fan, Q)
        entry = {
            "max_cones": [list(c) for c in fan.cones],
            "projective": nef.dimension() == Q.r,
            "nef": _cone_dict(nef),
        }
        if analysis is not None:
            entry["initial_ideals"] = [
                _ideal_dict(i) for i in sorted(set(ideals_of_fan.get(fan.cones, [])))
            ]
            entry["radical"] = (
                _ideal_dict(stanley_reisner(fan)) if entry["initial_ideals"] else None
            )
        return entry

    described = parallel_map(describe, fans, threads)
    report["fans"] = described
    report["counts"] = {"sf" if command != "psf" else "psf": len(fans)}

    mov = movable_cone(Q)
    eff = effective_cone(Q)
    report["movable"] = _cone_dict(mov)
    report["effective"] = _cone_dict(eff)
    report["anticanonical"] = list(anticanonical_class(Q))

    projective_cones = [
        entry["max_cones"] for entry in described if entry["projective"]
    ]
    chambers = sorted(
        projective_cones,
        key=lambda cones: nef_cone(
            _fan_by_cones(fans, cones), Q
        ).relative_interior_point(),
    )
    report["chamber_labels"] = {
        str(i + 1): cones for i, cones in enumerate(chambers)
    }

    if analysis is not None:
        report["counts"]["groebner_cones"] = len(analysis.records)
        report["counts"]["surviving_bases"] = len(analysis.surviving)
        report["counts"]["initial_ideals"] = len(analysis.survivors)
        report["counts"]["psf"] = len(analysis.fans)
        checks["radical_consistency"] = all(
            analysis.radical_of_ideal[s] == stanley_reisner(analysis.fan_of_ideal[s])
            for s in analysis.survivors
        )
        checks["refinement"] = all(
            nef_cone(analysis.fan_of_ideal[ideal], Q).contains(
                chamber_image(record, Q)
            )
            for record, ideal in analysis.surviving
            if analysis.fan_of_ideal.get(ideal) is not None
        )

    if command == "compare":
        report["counts"]["sf"] = len(fans)
        psf_cones = {f.cones for f in analysis.fans}
        sf_cones = {f.cones for f in fans}
        projective = {
            tuple(tuple(c) for c in entry["max_cones"])
            for entry in described
            if entry["projective"]
        }
        checks["psf_subset_sf"] = psf_cones <= sf_cones
        checks["psf_equals_projective_sf"] = psf_cones == projective
        report["non_projective_fans"] = [
            entry["max_cones"] for entry in described if not entry["projective"]
        ]
        w1, w2, w3 = groebner_region_three_ways(V, Q)
        checks["weight_region_triple"] = w1 == w2 == w3
        bunches_ok = True
        for fan in fans:
            for cone in bunch_of_fan(fan, Q):
                if cone.dimension() != Q.r:
                    bunches_ok = False
        checks["bunch_cones_full"] = bunches_ok
        if fiber_bound:
            from .binomials import NonGenericWeight, TermOrder
            from .toric import min_nonminima_check

            weight = None
            for shift in range(1, 40):
                cand = [shift + 7 * i for i in range(V.m)]
                try:
                    ok = min_nonminima_check(
                        analysis.ideal, TermOrder(cand), fiber_bound
                    )
                except NonGenericWeight:
                    continue
                weight = cand
                checks["fiber_minima"] = ok
                break
            report["fiber_check_weight"] = weight

    report["checks"] = checks
    return report


def _fan_by_cones(fans, cones):
    key = tuple(tuple(c) for c in cones)
    for f in fans:
        if f.cones == key:
            return f
    raise KeyError(cones)


def conjecture_report(V):
    result = pseudofan_conjecture_report(V)
    result["command"] = "conjecture"
    return result


def render_report(report, fmt="json"):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown format: {fmt}")


def _render_text(report, indent=0):
    lines = []

    def emit(key, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k in sorted(value):
                emit(k, value[k], depth + 1)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(value):
                emit(f"[{i}]", item, depth + 1)
        else:
            lines.append(f"{pad}{key}: {value}")

    for k in sorted(report):
        emit(k, report[k], indent)
    return "\n".join(lines) + "\n"


def report_checks_pass(report):
    return all(report.get("checks", {}).values())
