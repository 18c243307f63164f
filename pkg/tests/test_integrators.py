import numpy as np
import pytest
import scipy.linalg as la
from lowrank_strang.exceptions import (
    DimensionMismatchError,
    InvalidSchemeConfigError,
    NonlinearityBlowUpError,
    StepCountOverflowError,
)
from lowrank_strang.integrators import (
    Record,
    Scheme,
    bug2_midpoint_step,
    bug_augmented_step,
    heun_integrate,
    heun_step,
    integrate,
    phi_A_flow,
    strang_fullrank_step,
    strang_lowrank_step,
)
from lowrank_strang.linalg import orthonormality_defect
from lowrank_strang.lowrank import densify
from lowrank_strang.models import (
    BugWorkspace,
    ConstantForcing,
    GridSpec,
    HadamardPower,
    LowRankFactor,
    MatrixFunction,
    OperatorHandle,
    ProblemSpec,
    SchemeConfig,
    TruncationMode,
    ZeroForcing,
)
from lowrank_strang.problems import build_laplacian_1d, lyapunov_random_problem


def _zero(t, Y):
    return np.zeros_like(Y)


def test_heun_step():
    """Tests Heun steps on fields with known updates"""
    Y0 = np.arange(6.0).reshape(2, 3)
    c = np.ones((2, 3))

    assert np.array_equal(heun_step(_zero, 0.0, 0.1, Y0), Y0)
    assert np.allclose(heun_step(lambda t, Y: c, 0.0, 0.1, Y0), Y0 + 0.1 * c)
    # lambda tau = 0.1: 1 + 0.1 + 0.1^2 / 2
    assert np.isclose(heun_step(lambda t, Y: Y, 0.0, 0.1, np.array([[1.0]]))[0, 0], 1.105)
    # exact for fields linear in t
    assert np.isclose(
        heun_step(lambda t, Y: np.full_like(Y, t), 1.0, 0.5, np.zeros((1, 1)))[0, 0],
        0.5 * 1.25,
    )


def test_heun_integrate_substeps():
    """Tests that substeps reduce the error of the inner solver"""
    Y0 = np.array([[1.0]])
    exact = np.exp(-1.0)
    coarse = heun_integrate(lambda t, Y: -Y, 0.0, 1.0, Y0, substeps=4)[0, 0]
    fine = heun_integrate(lambda t, Y: -Y, 0.0, 1.0, Y0, substeps=8)[0, 0]

    assert abs(fine - exact) < abs(coarse - exact)
    assert 3.5 < abs(coarse - exact) / abs(fine - exact) < 4.5


def test_heun_blow_up():
    """Tests that non finite right hand sides are reported with their time"""
    with pytest.raises(NonlinearityBlowUpError) as e:
        heun_step(lambda t, Y: np.full_like(Y, np.inf), 0.0, 0.1, np.ones((2, 2)))
    assert str(e.value) == "nonlinearity blow-up at t = 0"

    with pytest.raises(NonlinearityBlowUpError):
        heun_integrate(lambda t, Y: Y**3, 0.0, 1.0, np.full((2, 2), 1e200), substeps=2)


def test_bug_augmented_step_zero_field(random_factor):
    """Tests that a vanishing field leaves the state unchanged"""
    Y0 = random_factor(8, 2)
    Y1 = bug_augmented_step(_zero, 0.0, 0.1, Y0, SchemeConfig(0.1))

    assert Y1.rank == 2
    assert np.allclose(densify(Y1), densify(Y0), atol=1e-13)


def test_bug_augmented_step_constant_in_range(random_factor, rng):
    """Tests exactness for a constant field in the span of the bases"""
    Y0 = random_factor(8, 2)
    Q = Y0.U @ rng.standard_normal((2, 2)) @ Y0.V.T
    Y1 = bug_augmented_step(lambda t, Y: Q, 0.0, 0.1, Y0, SchemeConfig(0.1))

    assert np.allclose(densify(Y1), densify(Y0) + 0.1 * Q, atol=1e-12)


def test_bug2_midpoint_step_zero_field(random_factor):
    """Tests that the midpoint step keeps the state and rank of a vanishing field"""
    Y0 = random_factor(8, 2)
    factor, workspace, tail_norm, floored = bug2_midpoint_step(
        _zero, 0.0, 0.1, Y0, SchemeConfig(0.1)
    )

    assert factor.rank == 2
    assert np.allclose(densify(factor), densify(Y0), atol=1e-13)
    assert tail_norm < 1e-13
    assert not floored
    assert workspace.r_bar == 2


def test_bug2_midpoint_step_constant_field(random_factor, rng):
    """Tests exactness for a constant rank two field outside the initial range"""
    Y0 = random_factor(8, 2)
    Q = densify(random_factor(8, 2))
    workspace = BugWorkspace()
    result = bug2_midpoint_step(
        lambda t, Y: Q,
        0.0,
        0.1,
        Y0,
        SchemeConfig(0.1, truncation=TruncationMode.adaptive(1e-12)),
        workspace,
    )
    expected = densify(Y0) + 0.1 * Q

    assert result.workspace is workspace
    assert result.factor.rank <= 4
    assert la.norm(densify(result.factor) - expected) <= 1e-10 * la.norm(expected)
    assert workspace.r_hat <= 4 and workspace.r_bar <= 8
    result.factor.validate()


def test_bug2_midpoint_step_fixed_rank(random_factor):
    """Tests that the step returns to the incoming rank without a truncation rule"""
    Y0 = random_factor(10, 3)
    result = bug2_midpoint_step(
        lambda t, Y: Y**3 - Y, 0.0, 0.05, Y0, SchemeConfig(0.05)
    )
    assert result.factor.rank == 3
    assert result.workspace.r_bar <= 12
    result.factor.validate()


def test_bug2_second_order_full_rank(rng):
    """Tests second order convergence when the factor has full rank"""
    m = 6
    B = rng.standard_normal((m, m)) / m
    U, _ = la.qr(rng.standard_normal((m, m)))
    Y0 = LowRankFactor(U, np.diag(np.linspace(1.0, 0.5, m)), np.eye(m))
    exact = la.expm(B) @ densify(Y0)

    errors = []
    for steps in (10, 20, 40):
        tau = 1.0 / steps
        Y = Y0
        for k in range(steps):
            Y = bug2_midpoint_step(lambda t, X: B @ X, k * tau, tau, Y, SchemeConfig(tau)).factor
        errors.append(la.norm(densify(Y) - exact))

    orders = np.log2(np.array(errors[:-1]) / np.array(errors[1:]))
    assert np.all(np.abs(orders - 2) < 0.2)


def test_bug2_second_order_hadamard_cube(rng):
    """Tests second order convergence on the elementwise cube at full rank"""
    m, T = 6, 0.1
    G = HadamardPower(3)
    U, _ = la.qr(rng.standard_normal((m, m)))
    Y0 = LowRankFactor(U, np.diag(np.linspace(1.0, 0.5, m)), np.eye(m))
    reference = heun_integrate(G, 0.0, T, densify(Y0), substeps=100000)

    errors = []
    for steps in (10, 20, 40, 80):
        tau = T / steps
        Y = Y0
        for k in range(steps):
            Y = bug2_midpoint_step(G, k * tau, tau, Y, SchemeConfig(tau)).factor
        errors.append(la.norm(densify(Y) - reference))

    orders = np.log2(np.array(errors[:-1]) / np.array(errors[1:]))
    assert np.all((orders >= 1.8) & (orders <= 2.2))


def test_bug_augmented_step_local_order(rng, random_factor):
    """Tests the third order local error of the augmented step on a linear field"""
    m = 6
    B = rng.standard_normal((m, m))
    A = (B + B.T) / (2 * np.sqrt(m))
    Y0 = random_factor(m, 2)
    X0 = densify(Y0)

    errors = []
    for tau in (0.01, 0.005, 0.0025):
        E = la.expm(tau * A)
        Y1 = bug_augmented_step(lambda t, Y: A @ Y + Y @ A, 0.0, tau, Y0, SchemeConfig(tau))
        assert Y1.rank <= 4
        errors.append(la.norm(densify(Y1) - E @ X0 @ E))

    ratios = np.array(errors[:-1]) / np.array(errors[1:])
    assert np.all((ratios >= 7) & (ratios <= 9))


def test_bug2_rank_caps_random_steps(rng, random_factor):
    """Tests the rank caps and orthonormality over many randomized midpoint steps"""
    steps = 0
    for trial in range(100):
        m = int(rng.integers(5, 13))
        B = rng.standard_normal((m, m)) / m
        Q = densify(random_factor(m, int(rng.integers(1, 3))))
        fields = (
            lambda t, Y: B @ Y + Y @ B.T,  # pylint: disable=cell-var-from-loop
            lambda t, Y: -(Y**3),
            lambda t, Y: Q - Y,  # pylint: disable=cell-var-from-loop
        )
        F = fields[trial % 3]
        truncation = None if trial % 2 else TruncationMode.adaptive(1e-10)
        tau = float(rng.uniform(0.01, 0.1))
        Y = random_factor(m, int(rng.integers(1, 4)))

        for k in range(10):
            result = bug2_midpoint_step(
                F, k * tau, tau, Y, SchemeConfig(tau, truncation=truncation)
            )
            workspace = result.workspace
            assert workspace.r_hat <= 2 * Y.rank
            assert workspace.r_bar <= 4 * Y.rank
            assert orthonormality_defect(workspace.U_bar) <= 1e-10
            assert orthonormality_defect(workspace.V_bar) <= 1e-10
            Y = result.factor.validate()
            steps += 1

    assert steps == 1000


def test_bug2_small_singular_values(rng):
    """Tests that tiny singular values in the initial core do not disturb the step"""
    m = 10
    U, _ = la.qr(rng.standard_normal((m, 4)), mode="economic")
    V, _ = la.qr(rng.standard_normal((m, 4)), mode="economic")
    S = np.zeros((4, 4))
    S[:2, :2] = rng.standard_normal((2, 2))
    tiny = S + np.diag([0.0, 0.0, 1e-14, 1e-14])
    cfg = SchemeConfig(0.05, truncation=TruncationMode.fixed(4))

    def F(t, Y):
        return -(Y**3) + 0.5 * Y

    exact_zero = bug2_midpoint_step(F, 0.0, 0.05, LowRankFactor(U, S, V), cfg).factor
    padded = bug2_midpoint_step(F, 0.0, 0.05, LowRankFactor(U, tiny, V), cfg).factor

    assert la.norm(densify(padded) - densify(exact_zero)) <= 1e-10


def test_phi_A_flow_diagonal(random_factor):
    """Tests the linear flow against a diagonal operator"""
    d = -np.arange(1.0, 7.0)
    A = OperatorHandle(np.diag(d), symmetric=True)
    Y = random_factor(6, 2)
    E = np.diag(np.exp(0.3 * d))
    Z = phi_A_flow(A, 0.3, Y)

    assert Z.rank == 2
    assert np.allclose(densify(Z), E @ densify(Y) @ E, atol=1e-13)
    Z.validate()


def test_phi_A_flow_random(random_factor, random_operator):
    """Tests the linear flow against dense exponentials"""
    A = random_operator(9)
    Y = random_factor(9, 3)
    E = la.expm(0.2 * A.dense)

    assert np.allclose(densify(phi_A_flow(A, 0.2, Y)), E @ densify(Y) @ E.T, atol=1e-12)
    assert phi_A_flow(A, 0.0, Y) is Y
    assert phi_A_flow(OperatorHandle(np.zeros((9, 9))), 0.2, Y) is Y


def test_phi_A_flow_zero_time(random_factor, random_operator):
    """Tests that a zero time flow computes no exponential but still checks shapes"""
    A = random_operator(9)
    Y = random_factor(9, 3)

    assert phi_A_flow(A, 0.0, Y) is Y
    assert not A._exponentials  # pylint: disable=protected-access

    with pytest.raises(DimensionMismatchError) as e:
        phi_A_flow(A, 0.0, random_factor(5, 2))
    assert str(e.value) == "phi_A_flow: incompatible shapes (9, 9) and (5, 5)."


def test_strang_lowrank_step_linear(random_factor, random_operator):
    """Tests that the step is the exact linear flow when G vanishes"""
    A = random_operator(8)
    Y0 = random_factor(8, 2)
    problem = ProblemSpec("linear", A, ZeroForcing(), Y0, T=1.0)
    E = la.expm(0.1 * A.dense)
    result = strang_lowrank_step(problem, 0.0, Y0, SchemeConfig(0.1))

    assert result.factor.rank == 2
    assert np.allclose(densify(result.factor), E @ densify(Y0) @ E.T, atol=1e-12)


def test_strang_lowrank_step_without_operator(random_factor):
    """Tests that the step reduces to a midpoint BUG step when A vanishes"""
    Y0 = random_factor(8, 2)
    problem = ProblemSpec(
        "cubic", OperatorHandle(np.zeros((8, 8))), MatrixFunction(lambda t, Y: Y**3), Y0, T=1.0
    )
    cfg = SchemeConfig(0.1)

    split = strang_lowrank_step(problem, 0.0, Y0, cfg).factor
    direct = bug2_midpoint_step(problem.G, 0.0, 0.1, Y0, cfg).factor
    assert np.allclose(densify(split), densify(direct), atol=1e-14)


def test_strang_lowrank_step_local_order(rng):
    """Tests the third order local error of one step on a Lyapunov equation"""
    m = 16
    A = build_laplacian_1d(GridSpec(m, -np.pi, np.pi))
    U, _ = la.qr(rng.standard_normal((m, m)))
    Y0 = LowRankFactor(U, np.diag(np.linspace(1.0, 0.1, m)), U)
    q = rng.standard_normal(m)
    q /= la.norm(q)
    problem = ProblemSpec("lyapunov", A, ConstantForcing(np.outer(q, q)), Y0, T=1.0)

    # vec(AX + XA^T + Q) = (I (x) A + A (x) I) vec(X) + vec(Q), bordered to absorb Q
    generator = np.zeros((m * m + 1, m * m + 1))
    generator[:-1, :-1] = np.kron(np.eye(m), A.dense) + np.kron(A.dense, np.eye(m))
    generator[:-1, -1] = np.outer(q, q).ravel(order="F")
    x0 = np.append(densify(Y0).ravel(order="F"), 1.0)

    errors = []
    for tau in (4e-3, 2e-3, 1e-3):
        exact = (la.expm(tau * generator) @ x0)[:-1].reshape((m, m), order="F")
        result = strang_lowrank_step(problem, 0.0, Y0, SchemeConfig(tau))
        assert result.factor.rank == m
        errors.append(la.norm(densify(result.factor) - exact))

    ratios = np.array(errors[:-1]) / np.array(errors[1:])
    assert np.all((ratios >= 7) & (ratios <= 9))


def test_strang_fullrank_step(random_factor, random_operator, rng):
    """Tests the dense step against its two limiting cases"""
    A = random_operator(6)
    X0 = densify(random_factor(6, 2))
    Q = rng.standard_normal((6, 6))
    E = la.expm(0.1 * A.dense)

    linear = ProblemSpec("linear", A, ZeroForcing(), LowRankFactor.from_dense(X0), T=1.0)
    assert np.allclose(
        strang_fullrank_step(linear, 0.0, X0, SchemeConfig(0.1)), E @ X0 @ E.T, atol=1e-12
    )

    forced = ProblemSpec(
        "forced",
        OperatorHandle(np.zeros((6, 6))),
        ConstantForcing(Q),
        LowRankFactor.from_dense(X0),
        T=1.0,
    )
    assert np.allclose(
        strang_fullrank_step(forced, 0.0, X0, SchemeConfig(0.1)), X0 + 0.1 * Q, atol=1e-13
    )


def test_integrate_without_steps(heat_small):
    """Tests that an empty interval returns the initial state"""
    result = integrate(heat_small, "lowrank_strang", SchemeConfig(0.1), T=heat_small.t0)

    assert result.steps == 0
    assert result.history == []
    assert result.state is heat_small.X0_lowrank
    assert result.delta == 0.0


def test_integrate_shortened_last_step(heat_small, caplog):
    """Tests that the last step lands exactly on T"""
    result = integrate(heat_small, Scheme.LOWRANK_STRANG, SchemeConfig(0.25))

    assert result.steps == 2
    assert np.isclose(result.history[0][0], 0.25)
    assert np.isclose(result.history[-1][0], 0.3)
    assert "last step is shortened" in caplog.text


def test_integrate_errors(heat_small):
    """Tests rejection of unknown schemes and oversized step counts"""
    with pytest.raises(InvalidSchemeConfigError) as e:
        integrate(heat_small, "rk4", SchemeConfig(0.1))
    assert str(e.value) == (
        "Unknown scheme 'rk4', expected one of: lowrank_strang, fullrank_strang, bug2_only."
    )

    with pytest.raises(StepCountOverflowError):
        integrate(heat_small, "fullrank_strang", SchemeConfig(1e-12))


def test_integrate_linear_exactness(heat_small):
    """Tests every scheme against the exact flow when G vanishes"""
    problem = heat_small.linear_only()
    E = la.expm(0.3 * problem.A.dense)
    X0 = densify(problem.X0_lowrank)
    exact = E @ X0 @ E.T
    cfg = SchemeConfig(0.1)

    lowrank = integrate(problem, Scheme.LOWRANK_STRANG, cfg)
    fullrank = integrate(problem, Scheme.FULLRANK_STRANG, cfg)

    assert lowrank.steps == 3
    assert la.norm(densify(lowrank.state) - exact) <= 1e-10 * la.norm(exact)
    assert la.norm(fullrank.state - exact) <= 1e-10 * la.norm(exact)
    assert lowrank.rank == problem.X0_lowrank.rank
    assert fullrank.rank is None
    assert all(rank is None for _, rank, _, _ in fullrank.history)


def test_integrate_preserves_symmetry():
    """Tests that symmetric data gives symmetric low-rank states at every step"""
    problem = lyapunov_random_problem(64, seed=7, T=0.3)
    result = integrate(
        problem,
        Scheme.LOWRANK_STRANG,
        SchemeConfig(0.003, truncation=TruncationMode.fixed(10)),
        record=Record(states=True, validate=True),
    )

    assert len(result.states) == result.steps == 100
    for _, state in result.states:
        X = densify(state)
        assert la.norm(X - X.T) <= 1e-9 * la.norm(X)
    assert result.max_rank == 10


def test_integrate_bug2_only_without_operator(random_factor):
    """Tests that the unsplit scheme agrees with the split one when A vanishes"""
    Y0 = random_factor(8, 2)
    problem = ProblemSpec(
        "quadratic",
        OperatorHandle(np.zeros((8, 8))),
        MatrixFunction(lambda t, Y: -(Y**2)),
        Y0,
        T=0.2,
    )
    cfg = SchemeConfig(0.05)
    split = integrate(problem, Scheme.LOWRANK_STRANG, cfg).state
    unsplit = integrate(problem, Scheme.BUG2_ONLY, cfg).state

    assert np.allclose(densify(split), densify(unsplit), atol=1e-12)


def test_integrate_initial_truncation(lyap_small):
    """Tests the initial rounding to a fixed target rank"""
    result = integrate(
        lyap_small,
        Scheme.LOWRANK_STRANG,
        SchemeConfig(0.1, truncation=TruncationMode.fixed(4)),
        T=lyap_small.t0,
    )
    sigma = la.svdvals(lyap_small.X0_lowrank.S)

    assert result.state.rank == 4
    assert np.isclose(result.delta, la.norm(sigma[4:]))
