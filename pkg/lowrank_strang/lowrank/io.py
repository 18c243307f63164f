# lowrank/io.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Serializes factors and dense states as Matrix Market files.

A factor is stored as a directory holding ``U.mtx``, ``S.mtx``, ``V.mtx`` and a
``manifest.json`` with its dimensions. Values are written with 17 significant digits, so
reading a file back reproduces the stored doubles exactly.

"""
import json
import logging
from pathlib import Path
from typing import Union
import numpy as np
import scipy.io
from lowrank_strang.exceptions import InvalidFactorError
from lowrank_strang.models import LowRankFactor

logger = logging.getLogger(__name__)

PRECISION = 17
MANIFEST = "manifest.json"


def _field(M: np.ndarray) -> str:
    return "complex" if np.iscomplexobj(M) else "real"


def save_dense(path: Union[str, Path], X: np.ndarray) -> Path:
    """
    Writes a dense matrix in Matrix Market array format.

    Args:
        path (`str` | `Path`): The target file.
        X (ndarray): The matrix.

    Returns:
        Path: The file written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    scipy.io.mmwrite(
        path, np.asarray(X), field=_field(X), precision=PRECISION, symmetry="general"
    )
    return path


def load_dense(path: Union[str, Path]) -> np.ndarray:
    """Reads a matrix written by save_dense."""
    M = scipy.io.mmread(Path(path))
    return M.toarray() if hasattr(M, "toarray") else np.asarray(M)


def save_factor(directory: Union[str, Path], Y: LowRankFactor) -> Path:
    """
    Writes a factor to a directory.

    Args:
        directory (`str` | `Path`): The target directory, created when missing.
        Y (LowRankFactor): The factor.

    Returns:
        Path: The directory written.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name in ("U", "S", "V"):
        save_dense(directory / f"{name}.mtx", getattr(Y, name))
    manifest = {"m": Y.shape[0], "n": Y.shape[1], "r": Y.rank, "field": _field(Y.S)}
    (directory / MANIFEST).write_text(json.dumps(manifest, indent=2, sort_keys=True))
    logger.debug("Wrote %r to %s", Y, directory)
    return directory


def load_factor(directory: Union[str, Path]) -> LowRankFactor:
    """
    Reads a factor written by save_factor.

    Raises:
        InvalidFactorError: If the stored matrices disagree with the manifest.
    """
    directory = Path(directory)
    manifest = json.loads((directory / MANIFEST).read_text())
    U, S, V = (load_dense(directory / f"{name}.mtx") for name in ("U", "S", "V"))
    expected = (manifest["m"], manifest["n"], manifest["r"])
    if (U.shape[0], V.shape[0], S.shape[0]) != expected:
        raise InvalidFactorError(f"stored matrices do not match the manifest {expected}")
    return LowRankFactor(U, S, V)
