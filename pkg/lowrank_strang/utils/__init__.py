# utils/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides hashing and time stepping utilities.

"""
from .hashing import array_digest, content_hash
from .timesteps import StepCount, step_count, time_steps
