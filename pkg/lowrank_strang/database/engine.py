# database/engine.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Database engine configuration. Each checkpoint directory carries its own catalog.

"""
from functools import lru_cache
from pathlib import Path
from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from lowrank_strang.config import config
from lowrank_strang.models import Base


@lru_cache(maxsize=None)
def _engine(url: str, echo: bool) -> Engine:
    connect_args = {"check_same_thread": False} if url.startswith("sqlite") else {}
    engine = create_engine(url, echo=echo, connect_args=connect_args)
    Base.metadata.create_all(engine)
    return engine


def get_engine(directory) -> Engine:
    """
    Returns the catalog engine of a checkpoint directory, creating its tables when missing.

    Args:
        directory (`str` | `Path`): The checkpoint directory.

    Returns:
        Engine.
    """
    directory = Path(directory).resolve()
    directory.mkdir(parents=True, exist_ok=True)
    database = config.database
    return _engine(database["url"].format(directory=directory.as_posix()), database["echo"])
