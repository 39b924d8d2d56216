import numpy as np
import pytest

import plaplab as pl


@pytest.fixture(scope="session")
def flat3():
    return pl.ModelSpace(n=3, K=0.0)


@pytest.fixture(scope="session")
def sinc_solution(flat3):
    """Oracle instance: n=3, p=2, a=1, sigma=1, K=0 has u = sin(r)/r."""
    params = pl.EquationParams(n=3, p=2.0, a=1.0, sigma=1.0)
    config = pl.ShootingConfig(u0=1.0, r_max=4.0)
    return pl.solve_radial(params, flat3, config)


@pytest.fixture(scope="session")
def sinc_log(sinc_solution):
    return pl.to_log_solution(sinc_solution)


def sinc(r):
    r = np.asarray(r, dtype=float)
    out = np.ones_like(r)
    m = r > 0
    out[m] = np.sin(r[m]) / r[m]
    return out
