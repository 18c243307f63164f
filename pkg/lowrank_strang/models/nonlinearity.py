# models/nonlinearity.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the non-stiff part G(t, X) of the matrix equation.

"""
from typing import Optional
import numpy as np


class Nonlinearity:
    """
    A pure, matrix valued right hand side G(t, Y). Evaluators hold no mutable state and may
    be called concurrently.
    """

    constant: bool = False
    """(bool): Whether G depends on neither t nor Y."""
    symmetric: bool = False
    """(bool): Whether G(t, Y) is symmetric whenever Y is."""
    label: str = "G"
    """(str): A human readable description."""

    def __call__(self, t: float, Y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__} <{self.label}>"


class ZeroForcing(Nonlinearity):
    """G(t, Y) = 0."""

    constant = True
    symmetric = True
    label = "0"

    def __call__(self, t: float, Y: np.ndarray) -> np.ndarray:
        return np.zeros_like(Y)


class ConstantForcing(Nonlinearity):
    """
    G(t, Y) = Q for a fixed matrix Q, optionally carried with a low-rank factorization.

    Args:
        Q (ndarray): The forcing matrix.
        factor (`LowRankFactor`, optional): A factorization of Q.
        label (str): A human readable description.
    """

    constant = True

    def __init__(self, Q: np.ndarray, factor=None, label: str = "Q") -> None:
        self.Q = np.array(Q)
        self.Q.setflags(write=False)
        self.factor = factor
        self.symmetric = bool(np.array_equal(self.Q, self.Q.T))
        self.label = label

    def __call__(self, t: float, Y: np.ndarray) -> np.ndarray:
        return self.Q


class HadamardPower(Nonlinearity):
    """
    The elementwise power G(t, Y) = Y^{∘p}.

    Args:
        power (int): The exponent p. Defaults to 3.
    """

    symmetric = True

    def __init__(self, power: int = 3, label: Optional[str] = None) -> None:
        self.power = power
        self.label = label or f"Y^{power} (elementwise)"

    def __call__(self, t: float, Y: np.ndarray) -> np.ndarray:
        return Y**self.power


class MatrixFunction(Nonlinearity):
    """
    Wraps a user supplied callable f(t, Y) as a nonlinearity.

    Args:
        function (callable): The pure right hand side.
        constant (bool): Whether f ignores both arguments.
        symmetric (bool): Whether f maps symmetric matrices to symmetric matrices.
        label (str): A human readable description.
    """

    def __init__(
        self, function, constant: bool = False, symmetric: bool = False, label: str = "f"
    ) -> None:
        self.function = function
        self.constant = constant
        self.symmetric = symmetric
        self.label = label

    def __call__(self, t: float, Y: np.ndarray) -> np.ndarray:
        return self.function(t, Y)
