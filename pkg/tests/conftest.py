from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from origami_codes.perm import Perm
from origami_codes.surface import Surface


@st.composite
def perms(draw, n=None, min_n=1, max_n=8):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    images = draw(st.permutations(list(range(1, n + 1))))
    return Perm(images)


@st.composite
def surfaces(draw, min_n=1, max_n=7, connected=None):
    n = draw(st.integers(min_n, max_n))
    s = draw(perms(n=n))
    t = draw(perms(n=n))
    X = Surface(s, t)
    if connected is not None:
        from hypothesis import assume

        assume(X.is_connected() == connected)
    return X


def random_perm(rng: random.Random, n: int) -> Perm:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Perm(images)


def random_surface(rng: random.Random, n: int, connected: bool = True) -> Surface:
    while True:
        X = Surface(random_perm(rng, n), random_perm(rng, n))
        if not connected or X.is_connected():
            return X


@pytest.fixture
def rng():
    return random.Random(20240611)


# acceptance criteria report one line each; filled by test_acceptance
CRITERIA: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[num])
