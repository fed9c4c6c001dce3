"""Shared fixtures: the worked example matrices and a random fan-matrix sampler."""

import random

import pytest

from fanforge.fans import AxiomViolation, validate_fan_matrix

# The projective plane: the unique complete fan on three rays.
P2_ROWS = [[1, 0, -1], [0, 1, -1]]

# The Berchtold-Hausen example: a rank-3 threefold with eight fans, two of
# them non-projective with nef cone spanned by the anticanonical class.
BH_V_ROWS = [
    [1, 0, 0, 0, -1, 1],
    [0, 1, 0, -1, -1, 2],
    [0, 0, 1, -1, 0, 1],
]
BH_Q_ROWS = [
    [1, 1, 0, 0, 1, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1],
]

# A 4-dimensional, 7-ray, rank-3 example where every fan is projective and
# chambers split into two Groebner cones each.
X47_V_ROWS = [
    [1, 1, 0, 2, -1, 0, 1],
    [0, 2, 0, 2, -1, 0, 1],
    [0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -1],
]
X47_Q_ROWS = [
    [1, 1, 0, 0, 2, 0, 0],
    [0, 0, 1, 1, 2, 0, 0],
    [0, 0, 0, 0, 1, 1, 1],
]

# The deformed Berchtold-Hausen example (fourth column class moved to
# (0, 1, 2)): eight fans, seven projective, one with trivial nef cone.
DEF21_V_ROWS = [
    [1, 0, 0, 0, -1, 1],
    [0, 1, 0, -1, -1, 3],
    [0, 0, 1, -1, 0, 2],
]
DEF21_Q_ROWS = [
    [1, 1, 0, 0, 1, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 0, 2, 1, 1],
]


@pytest.fixture(scope="session")
def P2():
    return validate_fan_matrix(P2_ROWS)


@pytest.fixture(scope="session")
def BH():
    return validate_fan_matrix(BH_V_ROWS)


@pytest.fixture(scope="session")
def X47():
    return validate_fan_matrix(X47_V_ROWS)


@pytest.fixture(scope="session")
def DEF21():
    return validate_fan_matrix(DEF21_V_ROWS)


def random_fan_matrices(count, seed=20240913, max_n=3, max_m=6):
    """Deterministically sampled valid fan matrices with small entries."""
    rng = random.Random(seed)
    found = []
    seen = set()
    while len(found) < count:
        n = rng.randint(2, max_n)
        m = rng.randint(n + 1, max_m)
        rows = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(n)]
        try:
            V = validate_fan_matrix(rows)
        except (AxiomViolation, ValueError):
            continue
        if V.rows in seen:
            continue
        seen.add(V.rows)
        found.append(V)
    return found
