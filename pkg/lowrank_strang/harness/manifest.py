# harness/manifest.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
The JSON manifest written next to the outputs of every command.

"""
import json
import logging
import platform
from datetime import datetime
from importlib import metadata
from pathlib import Path
from typing import Union
from lowrank_strang.config import config

logger = logging.getLogger(__name__)

PACKAGES = ("python-lowrank-strang", "numpy", "scipy", "sqlalchemy", "strenum", "toml")


def versions() -> dict:
    """Returns the versions of python and the libraries in use."""
    found = {"python": platform.python_version()}
    for package in PACKAGES:
        try:
            found[package] = metadata.version(package)
        except metadata.PackageNotFoundError:
            found[package] = None
    return found


def write_manifest(
    path: Union[str, Path], command: str, settings: dict, wall_time: float, /, **results
) -> Path:
    """
    Writes the full configuration, library versions and wall time of an invocation.

    Args:
        path (`str` | `Path`): The target file.
        command (str): The subcommand.
        settings (dict): The resolved command settings.
        wall_time (float): Seconds spent by the command.
        results (dict): Further JSON serializable outcomes, e.g. per cell errors.

    Returns:
        Path: The file written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    manifest = {
        "command": command,
        "settings": settings,
        "config": {
            section: getattr(config, section)
            for section in ("linalg", "integrators", "problems", "harness", "hashing")
        },
        "versions": versions(),
        "created_at": datetime.now().isoformat(timespec="seconds"),
        "wall_time_s": wall_time,
        **results,
    }
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True, default=str))
    logger.info("Wrote %s", path)
    return path
