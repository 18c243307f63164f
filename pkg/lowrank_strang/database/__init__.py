# database/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the checkpoint catalog database.

"""
from .engine import get_engine
from .session import CatalogSession, get_session
