# harness/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the experiment engine: convergence sweeps, order estimates, singular value dumps,
adaptive rank runs and reference solutions.

"""
from .runge import runge_order_estimate, halving_triples
from .reference import (
    ReferencePolicy,
    ReferenceSolution,
    load_checkpoint,
    reference_parameters,
    reference_solution,
)
from .sweep import convergence_sweep, truncation_modes
from .svdump import singular_value_dump
from .adaptive import adaptive_rank_run
from .manifest import write_manifest
