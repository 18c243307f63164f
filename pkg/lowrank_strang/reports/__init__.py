# reports/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the experiment reports.

"""
from .experiment_report import ExperimentReport
from .convergence_report import ConvergenceReport, ConvergenceRow
from .rank_history import RankHistory
from .singular_value_report import SingularValueReport
