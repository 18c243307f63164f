# integrators/heun.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
The explicit Heun method, the inner solver of every K, L and S integration.

"""
from typing import Callable
import numpy as np
from lowrank_strang.exceptions import NonlinearityBlowUpError

RightHandSide = Callable[[float, np.ndarray], np.ndarray]


def _checked(f: RightHandSide, t: float, Y: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", invalid="ignore"):
        value = f(t, Y)
    if not np.all(np.isfinite(value)):
        raise NonlinearityBlowUpError(t)
    return value


def heun_step(f: RightHandSide, t0: float, tau: float, Y0: np.ndarray) -> np.ndarray:
    """
    One Heun step Y0 + tau/2 (f(t0, Y0) + f(t0 + tau, Y0 + tau f(t0, Y0))).

    Args:
        f (callable): The right hand side (t, Y) -> Y'.
        t0 (float): The initial time.
        tau (float): The step size.
        Y0 (ndarray): The initial value.

    Raises:
        NonlinearityBlowUpError: If f returns non finite values.

    Returns:
        ndarray: The value at t0 + tau.
    """
    k1 = _checked(f, t0, Y0)
    with np.errstate(over="ignore", invalid="ignore"):
        predictor = Y0 + tau * k1
    k2 = _checked(f, t0 + tau, predictor)
    Y1 = Y0 + (tau / 2) * (k1 + k2)
    if not np.all(np.isfinite(Y1)):
        raise NonlinearityBlowUpError(t0 + tau)
    return Y1


def heun_integrate(
    f: RightHandSide, t0: float, tau: float, Y0: np.ndarray, substeps: int = 1
) -> np.ndarray:
    """
    Integrates Y' = f(t, Y) over [t0, t0 + tau] with equal Heun substeps.

    Args:
        f (callable): The right hand side (t, Y) -> Y'.
        t0 (float): The initial time.
        tau (float): The length of the interval.
        Y0 (ndarray): The initial value.
        substeps (int): The number of Heun steps. Defaults to 1.

    Returns:
        ndarray: The value at t0 + tau.
    """
    h = tau / substeps
    Y = Y0
    for k in range(substeps):
        Y = heun_step(f, t0 + k * h, h, Y)
    return Y
