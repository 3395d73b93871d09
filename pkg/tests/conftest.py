import random

import pytest
from hypothesis import settings

from swfold import alexander
from swfold.laurent import Basis, LaurentPoly
from swfold.manifolds import fiber_sum_with_knot, three_torus

settings.register_profile("deterministic", derandomize=True, max_examples=60)
settings.load_profile("deterministic")


@pytest.fixture(autouse=True)
def isolated_knot_table():
    """Snapshot the process-wide knot table around every test."""
    saved = dict(alexander._TABLE)
    yield
    alexander._TABLE.clear()
    alexander._TABLE.update(saved)


@pytest.fixture
def b1():
    return Basis(("t",))


@pytest.fixture
def b2():
    return Basis(("m1", "m2"))


@pytest.fixture
def b3():
    return Basis(("m1", "m2", "m3"))


def random_poly(rng: random.Random, basis: Basis, max_terms: int = 8,
                max_exp: int = 6, max_coeff: int = 9) -> LaurentPoly:
    """Random sparse polynomial for property suites (rank <= 3 scale)."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(-max_exp, max_exp) for _ in range(basis.rank))
        coeff = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c != 0])
        terms[exp] = coeff
    return LaurentPoly(basis, terms)


def random_basis(rng: random.Random) -> Basis:
    rank = rng.randint(1, 3)
    return Basis(tuple(f"x{i}" for i in range(1, rank + 1)))


@pytest.fixture
def fig8_pair():
    """Two figure-eight complements glued onto the first two torus meridians."""
    m = three_torus()
    m = fiber_sum_with_knot(m, alexander.knot_lookup("4_1"), "m1")
    return fiber_sum_with_knot(m, alexander.knot_lookup("4_1"), "m2")


@pytest.fixture
def five2_pair():
    """Two 5_2 complements glued onto the first two torus meridians."""
    m = three_torus()
    m = fiber_sum_with_knot(m, alexander.knot_lookup("5_2"), "m1")
    return fiber_sum_with_knot(m, alexander.knot_lookup("5_2"), "m2")
