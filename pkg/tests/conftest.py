import numpy as np
import pytest
import scipy.linalg as la
from lowrank_strang.database import get_engine, get_session
from lowrank_strang.models import (
    GridSpec,
    LowRankFactor,
    MatrixFunction,
    OperatorHandle,
    ProblemSpec,
)
from lowrank_strang.problems import (
    cubic_problem,
    heat_source_problem,
    lyapunov_random_problem,
)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def random_factor(rng):
    def make(m, r, n=None, scale=1.0):
        n = m if n is None else n
        U, _ = la.qr(rng.standard_normal((m, r)), mode="economic")
        V, _ = la.qr(rng.standard_normal((n, r)), mode="economic")
        return LowRankFactor(U, scale * rng.standard_normal((r, r)), V)

    return make


@pytest.fixture
def random_operator(rng):
    def make(m, shift=1.0):
        B = rng.standard_normal((m, m))
        return OperatorHandle(-(B @ B.T) / m - shift * np.eye(m), symmetric=True)

    return make


@pytest.fixture
def heat_small():
    return heat_source_problem(GridSpec(32, -np.pi, np.pi))


@pytest.fixture
def lyap_small():
    return lyapunov_random_problem(16, seed=7)


@pytest.fixture
def cubic_small():
    return cubic_problem(GridSpec(31, 0.0, 1.0))


@pytest.fixture
def checkpoint_dir(tmp_path):
    return tmp_path / "checkpoints"


@pytest.fixture
def session(checkpoint_dir):
    with get_session(get_engine(checkpoint_dir)) as session:
        yield session


@pytest.fixture
def smooth_problem(random_factor, random_operator):
    return ProblemSpec(
        "smooth",
        random_operator(6),
        MatrixFunction(lambda t, Y: -0.5 * Y**3, symmetric=True, label="-Y^3 / 2"),
        random_factor(6, 2),
        T=1.0,
    )
