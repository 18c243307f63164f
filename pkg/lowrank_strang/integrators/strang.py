# integrators/strang.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Strang splitting of X' = AX + XA^* + G(t, X) into the exactly solvable linear flow
X -> e^{tA} X e^{tA^*} and the nonlinear flow of G, composed as half linear step, full
nonlinear step, half linear step.

"""
import numpy as np
import scipy.linalg as la
from lowrank_strang.exceptions import DimensionMismatchError
from lowrank_strang.integrators.bug import StepResult, bug2_midpoint_step
from lowrank_strang.integrators.heun import heun_integrate
from lowrank_strang.linalg import adjoint, expm_action
from lowrank_strang.models import LowRankFactor, OperatorHandle, ProblemSpec, SchemeConfig


def phi_A_flow(A: OperatorHandle, t: float, Y: LowRankFactor) -> LowRankFactor:
    """
    The exact linear flow e^{tA} Y e^{tA^*} applied on the factors.

    Both bases are propagated by e^{tA} and re-orthonormalized by thin QR; the triangular
    factors are folded into the core, so the rank is unchanged.

    Args:
        A (OperatorHandle): The operator.
        t (float): The time, t >= 0.
        Y (LowRankFactor): The factor.

    Raises:
        DimensionMismatchError: If the factor does not match the operator.

    Returns:
        LowRankFactor: The propagated factor.
    """
    if Y.shape != (A.m, A.m):
        raise DimensionMismatchError("phi_A_flow", (A.m, A.m), Y.shape)
    if t == 0 or A.is_zero:
        return Y
    U = expm_action(A, t, Y.U)
    V = expm_action(A, t, Y.V)
    Q_u, R_u = la.qr(U, mode="economic")
    Q_v, R_v = la.qr(V, mode="economic")
    return LowRankFactor(Q_u, R_u @ Y.S @ adjoint(R_v), Q_v)


def _sandwich(A: OperatorHandle, t: float, X: np.ndarray) -> np.ndarray:
    if t == 0 or A.is_zero:
        return X
    E = A.exponential(t)
    return E @ X @ adjoint(E)


def strang_lowrank_step(
    problem: ProblemSpec, t0: float, Y0: LowRankFactor, cfg: SchemeConfig
) -> StepResult:
    """
    One low-rank Strang step: the linear half flows around a midpoint BUG step for G over
    [t0, t0 + tau].

    Args:
        problem (ProblemSpec): Supplies A and G.
        t0 (float): The initial time.
        Y0 (LowRankFactor): The initial value.
        cfg (SchemeConfig): The step size, inner resolution and truncation rule.

    Returns:
        StepResult: The new factor with the truncation diagnostics of the BUG step.
    """
    half = cfg.tau / 2
    Z = phi_A_flow(problem.A, half, Y0)
    result = bug2_midpoint_step(problem.G, t0, cfg.tau, Z, cfg)
    return result._replace(factor=phi_A_flow(problem.A, half, result.factor))


def strang_fullrank_step(
    problem: ProblemSpec, t0: float, X0: np.ndarray, cfg: SchemeConfig
) -> np.ndarray:
    """
    One dense Strang step, the reference scheme: the exponential sandwich over tau/2, the
    nonlinear subproblem X' = G(t, X) by Heun over [t0, t0 + tau], and a second sandwich.

    Args:
        problem (ProblemSpec): Supplies A and G.
        t0 (float): The initial time.
        X0 (ndarray): The m x m initial value.
        cfg (SchemeConfig): The step size and the number of Heun substeps.

    Returns:
        ndarray: The state at t0 + tau.
    """
    half = cfg.tau / 2
    X = _sandwich(problem.A, half, X0)
    X = heun_integrate(problem.G, t0, cfg.tau, X, cfg.inner_substeps)
    return _sandwich(problem.A, half, X)
