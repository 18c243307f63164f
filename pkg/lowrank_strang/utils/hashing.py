# utils/hashing.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Content hashes identifying reference solutions and digests of stored matrices.

"""
import hashlib
import numpy as np
from lowrank_strang.config import config


def _hasher():
    return getattr(hashlib, config.hashing["algorithm"])


def content_hash(params: dict) -> str:
    """
    Hash of a set of problem parameters, independent of their order.

    Args:
        params (dict): Scalar or string parameters, e.g. label, m, seed, T and tau_ref.

    Returns:
        str: The hexadecimal digest.
    """
    return _hasher()(
        ",".join(
            [config.hashing["salt"]]
            + [f"{key}={params[key]!r}" for key in sorted(params)]
        ).encode()
    ).hexdigest()


def array_digest(X: np.ndarray) -> str:
    """Digest of the shape, scalar type and raw bytes of an array."""
    X = np.ascontiguousarray(X)
    digest = _hasher()(f"{X.shape}:{X.dtype.str}:".encode())
    digest.update(X.tobytes())
    return digest.hexdigest()
