"""Pytest configuration and shared fixtures."""

import numpy as np
import pytest
from unittest.mock import MagicMock

from simplexnet.lattice.square import build_square_network
from simplexnet.lattice.triangular import build_six_site, build_triangular_patch
from simplexnet.simplex.catalog import get_simplex
from simplexnet.spectral.couplings import default_couplings
from simplexnet.store.factory import get_storage


@pytest.fixture
def six_site():
    """Six-site lattice with a shared edge."""
    return build_six_site()


@pytest.fixture
def six_site_triangle_couplings(six_site):
    """Six-site couplings counted per up-triangle; the shared edge carries 2J."""
    return default_couplings(six_site, per_triangle=True)


@pytest.fixture
def patch1():
    """Single up-triangle patch."""
    return build_triangular_patch(1)


@pytest.fixture
def patch2():
    """Side-2 triangular patch (6 sites, 3 up-triangles)."""
    return build_triangular_patch(2)


@pytest.fixture
def patch3():
    """Side-3 triangular patch (10 sites, 6 up-triangles)."""
    return build_triangular_patch(3)


@pytest.fixture
def patch4():
    """Side-4 triangular patch (15 sites, 10 up-triangles)."""
    return build_triangular_patch(4)


@pytest.fixture
def square_network():
    """Default 4 x 6 square network of checked plaquettes."""
    return build_square_network()


@pytest.fixture
def w_simplex():
    """Catalog W simplex."""
    return get_simplex("w")


@pytest.fixture
def ghz_simplex():
    """Catalog GHZ simplex."""
    return get_simplex("ghz")


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(1234)


@pytest.fixture
def storage():
    """In-memory DuckDB storage."""
    store = get_storage("duckdb", {"db_path": ":memory:"})
    yield store
    store.close()


@pytest.fixture
def mock_storage():
    """Mock storage for testing."""
    storage = MagicMock()
    storage.load_runs.return_value = []
    storage.load_table1_rows.return_value = []
    storage.load_scan_evaluations.return_value = []
    storage.load_ground_manifolds.return_value = []
    return storage


@pytest.fixture
def app_config():
    """Minimal application config dictionary."""
    return {
        "caps": {},
        "storage": {"type": "duckdb", "db_path": ":memory:", "enabled": False},
        "logging": {"level": "WARNING"},
        "workers": 1,
    }


@pytest.fixture
def lattice_file(tmp_path):
    """Six-site lattice written in the line format."""
    path = tmp_path / "six.lat"
    path.write_text(
        "# six sites\n"
        "n 6\n"
        "t 0 1 2\n"
        "t 2 3 4\n"
        "t 2 4 5\n"
    )
    return str(path)


@pytest.fixture
def instance_file(tmp_path):
    """Exact Cover instance of the six-site lattice."""
    path = tmp_path / "six.cnf"
    path.write_text(
        "p ec 6 3\n"
        "c 0 1 2\n"
        "c 2 3 4\n"
        "c 2 4 5\n"
    )
    return str(path)
