# models/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the value types shared by the integrators, problems and harness.

"""
from .operator import OperatorHandle
from .grid import GridSpec
from .truncation import TruncationMode
from .low_rank_factor import LowRankFactor
from .scheme import SchemeConfig
from .workspace import BugWorkspace
from .nonlinearity import (
    Nonlinearity,
    ZeroForcing,
    ConstantForcing,
    HadamardPower,
    MatrixFunction,
)
from .problem_spec import ProblemSpec
from .base import Base
from .checkpoint import Checkpoint
