import math

import numpy as np
import pytest

from gravscatter import CouplingConfig
from gravscatter.validation import random_on_shell, random_states


@pytest.fixture
def unit_coupling():
    return CouplingConfig(G=1.0, g_squared=4.0 * math.pi)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(scope="session")
def sample_states():
    """Seeded sample spanning m, M in [0.1, 100] GeV and E/M in [1e-4, 1e2]."""
    return random_states(np.random.default_rng(20240917), 1000)


@pytest.fixture(scope="session")
def momentum_pairs():
    rng = np.random.default_rng(99)
    out = []
    for _ in range(1000):
        m = 10.0 ** rng.uniform(-1, 2)
        out.append((m, random_on_shell(rng, m), random_on_shell(rng, m)))
    return out
