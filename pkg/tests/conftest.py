import numpy as np
import pytest

from varreg.presets import PRESETS
from varreg.region import boundary_curve


@pytest.fixture(scope="session")
def curves512():
    return {pid: boundary_curve(p.params, p.z0, 512) for pid, p in PRESETS.items()}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
