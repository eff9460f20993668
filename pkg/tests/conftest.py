import numpy as np
import pytest

from incscc.graph import EdgeSequence


@pytest.fixture
def t3():
    """3-cycle closing at t=3: the hand-simulated fixture used throughout."""
    return EdgeSequence.from_pairs([(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
