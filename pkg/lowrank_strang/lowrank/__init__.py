# lowrank/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the factored low-rank state algebra and its serialization.

"""
from .operations import (
    Truncation,
    densify,
    svd_truncate,
    factor_from_dense,
    factored_sum,
    factored_distance,
    state_distance,
    state_norm,
    singular_values,
    with_rank,
)
from .io import save_dense, load_dense, save_factor, load_factor
