# linalg/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides dense linear algebra primitives.

"""

from .core import (
    adjoint,
    expm_action,
    frob_distance,
    orth,
    orthonormality_defect,
    scalar_type,
    svd_full,
)
