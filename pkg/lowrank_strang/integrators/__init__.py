# integrators/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the time stepping schemes.

"""
from .heun import heun_step, heun_integrate
from .bug import StepResult, bug_augmented_step, bug2_midpoint_step
from .strang import phi_A_flow, strang_lowrank_step, strang_fullrank_step
from .integrate import Scheme, Record, IntegrationResult, initial_state, integrate
