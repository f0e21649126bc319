import math

import numpy as np
import pytest

from acring.su2 import Generator3, SU2Element, su2_exp


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_su2(rng: np.random.Generator) -> SU2Element:
    """Haar-ish random element via a random axis and angle."""
    axis = rng.normal(size=3)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return su2_exp(Generator3(tuple(axis)), angle)
