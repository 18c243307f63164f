import numpy as np
import pytest
import scipy.linalg as la
from lowrank_strang.exceptions import (
    InvalidProblemError,
    NonSquareOperatorError,
    OperatorParseError,
    UnknownProblemError,
)
from lowrank_strang.lowrank import densify, save_dense
from lowrank_strang.models import ConstantForcing, GridSpec, HadamardPower, OperatorHandle
from lowrank_strang.problems import (
    ProblemLabel,
    benchmark_grid,
    build_laplacian_1d,
    build_problem,
    compatibility_proxy,
    cubic_problem,
    heat_source_problem,
    load_operator,
    lyapunov_random_problem,
)


def test_laplacian_stencil():
    """Tests the tridiagonal stencil on a unit spaced grid"""
    A = build_laplacian_1d(GridSpec(3, 0.0, 4.0))

    assert A.storage == OperatorHandle.Storage.BANDED
    assert A.symmetric
    assert np.array_equal(
        A.dense, np.array([[-2.0, 1.0, 0.0], [1.0, -2.0, 1.0], [0.0, 1.0, -2.0]])
    )
    assert np.allclose(A @ np.eye(3), A.dense)


def test_laplacian_spectrum():
    """Tests the eigenvalues -4/h^2 sin^2(k pi h / 2 (hi - lo))"""
    grid = GridSpec(20, 0.0, 1.0)
    A = build_laplacian_1d(grid, scale=0.5)
    k = np.arange(1, 21)
    expected = -0.5 * 4 / grid.h**2 * np.sin(k * np.pi / 42) ** 2

    assert np.allclose(np.sort(la.eigvalsh(A.dense)), np.sort(expected))
    assert np.all(la.eigvalsh(A.dense) < 0)


def test_heat_source_problem(heat_small):
    """Tests the structure of the heat benchmark"""
    assert heat_small.label == "heat"
    assert heat_small.m == 32
    assert heat_small.T == 0.3
    assert isinstance(heat_small.G, ConstantForcing)
    assert heat_small.G.factor.rank == 1
    assert heat_small.G.symmetric

    x = GridSpec(32, -np.pi, np.pi).nodes
    assert np.allclose(heat_small.G(0.0, None), np.outer(np.sin(x), np.sin(x)))

    X0 = densify(heat_small.X0_lowrank)
    assert np.allclose(X0, X0.T)
    assert np.min(la.eigvalsh((X0 + X0.T) / 2)) > -1e-12
    heat_small.X0_lowrank.validate()


def test_heat_initial_value_at_origin():
    """Tests u0(0, 0) = sum_k 10^{-(k-1)} on a grid through the origin"""
    problem = heat_source_problem(GridSpec(33, -np.pi, np.pi))
    X0 = densify(problem.X0_lowrank)

    assert np.isclose(X0[16, 16], sum(10.0 ** -(k - 1) for k in range(1, 11)), rtol=1e-12)


def test_heat_source_coefficients():
    """Tests sources with several modes and the rejection of a vanishing source"""
    problem = heat_source_problem(GridSpec(32, -np.pi, np.pi), coefficients=[1, 0, 0.5])
    assert problem.G.factor.rank == 2

    with pytest.raises(InvalidProblemError) as e:
        heat_source_problem(GridSpec(32, -np.pi, np.pi), coefficients=[0, 0])
    assert str(e.value) == "The heat source needs at least one nonzero coefficient."


def test_lyapunov_random_problem(lyap_small):
    """Tests ranks, normalization and reproducibility of the random benchmark"""
    assert lyap_small.X0_lowrank.rank == 10
    assert lyap_small.G.factor.rank == 5
    assert np.isclose(la.norm(densify(lyap_small.X0_lowrank)), 1.0)
    assert np.isclose(la.norm(lyap_small.G.Q), 1.0)
    assert lyap_small.metadata["seed"] == 7

    again = lyapunov_random_problem(16, seed=7)
    assert np.array_equal(again.X0_lowrank.S, lyap_small.X0_lowrank.S)
    assert np.array_equal(again.G.Q, lyap_small.G.Q)

    other = lyapunov_random_problem(16, seed=8)
    assert not np.allclose(other.G.Q, lyap_small.G.Q)

    X0 = densify(lyap_small.X0_lowrank)
    assert np.min(la.eigvalsh((X0 + X0.T) / 2)) > -1e-12


def test_lyapunov_random_problem_too_small():
    """Tests that grids below 16 points are rejected"""
    with pytest.raises(InvalidProblemError) as e:
        lyapunov_random_problem(8)
    assert str(e.value) == "The random Lyapunov problem needs m >= 16, got 8."


def test_cubic_problem():
    """Tests the cubic benchmark initial value and nonlinearity"""
    problem = cubic_problem(GridSpec(127, 0.0, 1.0))
    X0 = densify(problem.X0_lowrank)

    assert problem.X0_lowrank.rank == 1
    assert np.isclose(X0[63, 63], 1.0)
    assert isinstance(problem.G, HadamardPower)
    assert np.allclose(problem.G(0.0, X0), X0**3)
    assert np.allclose(problem.A.dense, 0.02 * build_laplacian_1d(GridSpec(127, 0.0, 1.0)).dense)
    assert problem.metadata["alpha"] == 0.02


def test_cubic_problem_alpha(cubic_small):
    """Tests the validation of the diffusion coefficient"""
    assert cubic_problem(GridSpec(31, 0.0, 1.0), alpha=0.5).A.scale == 0.5
    assert cubic_small.A.scale == 0.02

    with pytest.raises(InvalidProblemError) as e:
        cubic_problem(GridSpec(31, 0.0, 1.0), alpha=0.0)
    assert str(e.value) == "The diffusion coefficient must be positive, got 0.0."


def test_compatibility_proxy(heat_small):
    """Tests that compatible sources give a bounded proxy and random ones a growing one"""
    assert 1.9 < compatibility_proxy(heat_small) < 2.0
    assert 1.9 < compatibility_proxy(heat_source_problem(GridSpec(64, -np.pi, np.pi))) < 2.0

    coarse = compatibility_proxy(lyapunov_random_problem(16, seed=1))
    fine = compatibility_proxy(lyapunov_random_problem(64, seed=1))
    assert fine > 4 * coarse


def test_build_problem():
    """Tests benchmark construction by label"""
    assert [label.value for label in ProblemLabel] == ["heat", "lyap-random", "cubic"]
    assert build_problem("heat", 16).label == "heat"
    assert build_problem("lyap-random", 16, seed=3).metadata["seed"] == 3
    assert build_problem("cubic", 15, alpha=0.1, T=0.1).T == 0.1
    assert benchmark_grid("cubic", 15) == GridSpec(15, 0.0, 1.0)

    with pytest.raises(UnknownProblemError) as e:
        build_problem("wave", 16)
    assert str(e.value) == "Unknown problem 'wave', expected one of: heat, lyap-random, cubic."


def test_load_operator_coordinate(tmp_path):
    """Tests reading a symmetric coordinate file"""
    path = tmp_path / "identity.mtx"
    path.write_text(
        "%%MatrixMarket matrix coordinate real symmetric\n"
        "% the 3x3 identity\n"
        "3 3 3\n"
        "1 1 1.0\n"
        "2 2 1.0\n"
        "3 3 1.0\n"
    )
    A = load_operator(path)

    assert A.m == 3
    assert A.symmetric
    assert A.storage == OperatorHandle.Storage.DENSE
    assert A.label == "identity.mtx"
    assert np.array_equal(A.dense, np.eye(3))


def test_load_operator_array(tmp_path, rng):
    """Tests that an operator written as an array reads back exactly"""
    M = rng.standard_normal((5, 5))
    A = load_operator(save_dense(tmp_path / "A.mtx", M))

    assert np.array_equal(A.dense, M)
    assert not A.symmetric


@pytest.mark.parametrize(
    "content, line, reason",
    [
        ("", 1, "the file is empty"),
        ("%%MatrixMarket vector coordinate real general\n", 1,
         "missing '%%MatrixMarket matrix' banner"),
        ("%%MatrixMarket matrix coordinate octonion general\n2 2 0\n", 1,
         "unsupported field 'octonion'"),
        ("%%MatrixMarket matrix coordinate real general\n", 1, "missing size line"),
        ("%%MatrixMarket matrix coordinate real general\n2 2\n", 2, "expected 3 sizes, got 2"),
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 x 1.0\n", 3,
         "could not parse 'x' as a number"),
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 3 1.0\n", 3,
         "column index 3 outside 1..2"),
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1\n", 3,
         "expected 3 fields, got 2"),
        ("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n", 3,
         "expected 2 entries, found 1"),
        ("%%MatrixMarket matrix array real general\n2 2\n1.0\n2.0\n3.0\n", 5,
         "expected 4 entries, found 3"),
    ],
)
def test_load_operator_parse_errors(tmp_path, content, line, reason):
    """Tests that malformed files are reported with the offending line"""
    path = tmp_path / "bad.mtx"
    path.write_text(content)

    with pytest.raises(OperatorParseError) as e:
        load_operator(path)
    assert str(e.value) == f"{path}:{line}: {reason}"
    assert e.value.line == line


def test_load_operator_not_square(tmp_path):
    """Tests the rejection of rectangular operators"""
    path = tmp_path / "wide.mtx"
    path.write_text("%%MatrixMarket matrix coordinate real general\n2 3 1\n1 1 1.0\n")

    with pytest.raises(NonSquareOperatorError) as e:
        load_operator(path)
    assert str(e.value) == f"{path}:2: operator must be square, got 2x3."
