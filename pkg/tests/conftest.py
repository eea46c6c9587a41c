import random

import pytest

from helixlab import load_preset
from helixlab.mutation import Move, apply_word


@pytest.fixture(scope="session")
def p3():
    return load_preset("p3")


@pytest.fixture(scope="session")
def q3():
    return load_preset("q3")


@pytest.fixture(scope="session")
def v5():
    return load_preset("v5")


@pytest.fixture(scope="session")
def v22():
    return load_preset("v22")


@pytest.fixture(scope="session")
def G3(p3):
    return p3.gram_form


@pytest.fixture(scope="session")
def GQ(q3):
    return q3.gram_form


def random_word(rng, n, max_len):
    return tuple(Move(rng.choice("LR"), rng.randint(1, n - 1)) for _ in range(rng.randint(0, max_len)))


def sample_bases(G, count, seed=0, max_len=8):
    """Bases reached from the reference basis by random words of length <= max_len."""
    rng = random.Random(seed)
    ref = G.reference_basis()
    return [apply_word(G, ref, random_word(rng, G.n, max_len)) for _ in range(count)]
