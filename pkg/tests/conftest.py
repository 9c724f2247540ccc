import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hexwp import lattice, wfun
from hexwp.constants import get_constants

settings.register_profile(
    "hexwp",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("hexwp")


@pytest.fixture(scope="session")
def consts():
    return get_constants()


@pytest.fixture(scope="session")
def opts():
    return wfun.default_options()


@pytest.fixture(scope="session")
def unit_lattice():
    return lattice.HexLattice(scale=1.0)


@pytest.fixture(scope="session")
def period_lattice(consts):
    return lattice.HexLattice(scale=consts.varpi)


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)


def _cell_samples(rng, n, lat, margin):
    """Seeded cell points at least `margin` away from the lattice."""
    out = []
    while len(out) < n:
        s, t = rng.random(), rng.random()
        z = lattice.cell_point(lattice.CellCoords(s, t), lat)
        if lattice.dist_to_lattice(z, lat) >= margin:
            out.append(z)
    return out


@pytest.fixture(scope="session")
def cell_sampler():
    return _cell_samples
