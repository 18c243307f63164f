# integrators/bug.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Basis update & Galerkin integrators: the augmented first order step and the second order
midpoint variant.

The right hand side F is evaluated on densified products at desk scale.

"""
import logging
from typing import NamedTuple, Optional
import numpy as np
from lowrank_strang.integrators.heun import RightHandSide, heun_integrate
from lowrank_strang.exceptions import NonlinearityBlowUpError
from lowrank_strang.linalg import adjoint, orth
from lowrank_strang.lowrank import densify, svd_truncate
from lowrank_strang.models import (
    BugWorkspace,
    LowRankFactor,
    SchemeConfig,
    TruncationMode,
)

logger = logging.getLogger(__name__)


class StepResult(NamedTuple):
    """The outcome of a truncated step."""

    factor: LowRankFactor
    """(LowRankFactor): The truncated state at the end of the step."""
    workspace: BugWorkspace
    """(BugWorkspace): The intermediate matrices of the step."""
    tail_norm: float
    """(float): Frobenius norm of the singular values discarded by the truncation."""
    floored: bool
    """(bool): Whether adaptive truncation hit the rank 1 floor."""


def _galerkin(
    F: RightHandSide,
    t0: float,
    tau: float,
    S0: np.ndarray,
    U: np.ndarray,
    V: np.ndarray,
    substeps: int,
) -> np.ndarray:
    # S' = U^* F(t, U S V^*) V in the fixed bases
    def rhs(t, S):
        return adjoint(U) @ F(t, U @ S @ adjoint(V)) @ V

    return heun_integrate(rhs, t0, tau, S0, substeps)


def _augmented(
    F: RightHandSide,
    t0: float,
    tau: float,
    Y0: LowRankFactor,
    substeps: int,
    workspace: BugWorkspace,
) -> LowRankFactor:
    U0, S0, V0 = Y0.U, Y0.S, Y0.V

    def k_rhs(t, K):
        return F(t, K @ adjoint(V0)) @ V0

    def l_rhs(t, L):
        return adjoint(F(t, U0 @ adjoint(L))) @ U0

    workspace.K = heun_integrate(k_rhs, t0, tau, U0 @ S0, substeps)
    workspace.L = heun_integrate(l_rhs, t0, tau, V0 @ adjoint(S0), substeps)

    workspace.U_hat = orth(np.hstack([U0, workspace.K]))
    workspace.V_hat = orth(np.hstack([V0, workspace.L]))
    workspace.M_hat = adjoint(workspace.U_hat) @ U0
    workspace.N_hat = adjoint(workspace.V_hat) @ V0

    workspace.S_hat = _galerkin(
        F,
        t0,
        tau,
        workspace.M_hat @ S0 @ adjoint(workspace.N_hat),
        workspace.U_hat,
        workspace.V_hat,
        substeps,
    )
    return LowRankFactor(workspace.U_hat, workspace.S_hat, workspace.V_hat)


def bug_augmented_step(
    F: RightHandSide, t0: float, tau: float, Y0: LowRankFactor, cfg: SchemeConfig
) -> LowRankFactor:
    """
    One augmented basis update & Galerkin step, without truncation.

    The K and L equations are integrated from U0 S0 and V0 S0^* with the other basis frozen, the
    bases are augmented to orth([U0, K(t1)]) and orth([V0, L(t1)]) and the Galerkin core is
    integrated in the augmented bases.

    Args:
        F (callable): The right hand side (t, Y) -> Y'.
        t0 (float): The initial time.
        tau (float): The step size.
        Y0 (LowRankFactor): The initial value of rank r.
        cfg (SchemeConfig): Supplies the number of inner Heun steps.

    Raises:
        NonlinearityBlowUpError: If F returns non finite values.
        DegenerateBasisError: If an augmented basis cannot be formed.

    Returns:
        LowRankFactor: The state at t0 + tau, of rank at most 2r.
    """
    return _augmented(F, t0, tau, Y0, cfg.inner_substeps, BugWorkspace())


def bug2_midpoint_step(
    F: RightHandSide,
    t0: float,
    tau: float,
    Y0: LowRankFactor,
    cfg: SchemeConfig,
    workspace: Optional[BugWorkspace] = None,
) -> StepResult:
    """
    One second order midpoint basis update & Galerkin step.

    An untruncated augmented step over tau/2 predicts the midpoint state. Its bases, extended
    by tau F(t_{1/2}, Y_{1/2}) applied to the opposite basis, span the Galerkin space of rank at
    most 4r in which the core is integrated over the whole step. The result is rounded with
    cfg.truncation, or to the incoming rank when none is set.

    Args:
        F (callable): The right hand side (t, Y) -> Y'.
        t0 (float): The initial time.
        tau (float): The step size.
        Y0 (LowRankFactor): The initial value of rank r.
        cfg (SchemeConfig): The inner resolution and the truncation rule.
        workspace (`BugWorkspace`, optional): Receives the intermediate matrices.

    Raises:
        NonlinearityBlowUpError: If F returns non finite values.
        RankCapExceededError: If an augmented basis exceeds 2r or 4r columns.

    Returns:
        StepResult: The truncated factor, the workspace, the truncation tail and floor flag.
    """
    workspace = BugWorkspace() if workspace is None else workspace
    U0, S0, V0 = Y0.U, Y0.S, Y0.V

    half = _augmented(F, t0, tau / 2, Y0, cfg.inner_substeps, workspace)
    t_half = t0 + tau / 2
    with np.errstate(over="ignore", invalid="ignore"):
        F_half = tau * F(t_half, densify(half))
    if not np.all(np.isfinite(F_half)):
        raise NonlinearityBlowUpError(t_half)

    workspace.U_bar = orth(np.hstack([half.U, F_half @ half.V]))
    workspace.V_bar = orth(np.hstack([half.V, adjoint(F_half) @ half.U]))
    workspace.M_bar = adjoint(workspace.U_bar) @ U0
    workspace.N_bar = adjoint(workspace.V_bar) @ V0
    workspace.check_rank_caps(Y0.rank)

    workspace.S_bar = _galerkin(
        F,
        t0,
        tau,
        workspace.M_bar @ S0 @ adjoint(workspace.N_bar),
        workspace.U_bar,
        workspace.V_bar,
        cfg.inner_substeps,
    )

    mode = cfg.truncation or TruncationMode.fixed(Y0.rank)
    factor, tail_norm, floored = svd_truncate(
        LowRankFactor(workspace.U_bar, workspace.S_bar, workspace.V_bar), mode
    )
    if floored:
        logger.warning(
            "Adaptive truncation with %s kept rank 1 at t = %.6g", mode, t0 + tau
        )
    logger.debug(
        "BUG2 step t = %.6g: r = %d, r_hat = %d, r_bar = %d, r1 = %d, tail = %.3e",
        t0,
        Y0.rank,
        workspace.r_hat,
        workspace.r_bar,
        factor.rank,
        tail_norm,
    )
    return StepResult(factor, workspace, tail_norm, floored)
