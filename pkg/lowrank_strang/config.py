# config.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
This module provides the configuration for lowrank strang. Its properties are populated from
`config.toml` by default and should be adequate for desk-scale experiments, but there are a few
methods for overriding the linear algebra, integrator, harness, database and logging
configurations. For more extensive custom configurations, you can initialize the class with a
custom config.toml file.

"""
import os
import pathlib
import toml


class Config:
    """
    Lowrank Strang configuration class.
    """

    linalg: dict
    """
    The dense linear algebra configuration.
    ::
        {
            dtype (str): The numpy scalar type of every matrix. Defaults to 'float64'.
            orth_tol (float): Relative residual below which orth drops a column. Defaults to 1e-12.
            orthonormality_tol (float): Tolerance of the factor validator. Defaults to 1e-10.
        }
    """
    integrators: dict
    """
    Time stepping configuration.
    ::
        {
            inner_substeps (int): Heun steps per K, L and S integration. Defaults to 1.
            max_steps (int): Guard against runaway step counts. Defaults to 1e8.
            step_ratio_tol (float): Relative distance from an integer under which
            (T - t0) / tau is treated as an exact step count. Defaults to 1e-9.
        }
    """
    problems: dict
    """
    Benchmark problem configuration.
    ::
        {
            machine_tail (float): Relative truncation used when assembling initial factors.
            benchmarks (dict): Label, domain, horizon and data parameters of each benchmark.
        }
    """
    harness: dict
    """
    Experiment harness configuration.
    ::
        {
            m (int): Default grid size for sweeps. Defaults to 128.
            reference_m (int): Grid size for the most expensive dense references. Defaults to 64.
            tau_ref (float): Step of the dense reference solution. Defaults to 1e-5.
            tau (float): Default step of singular value dumps. Defaults to 1e-3.
            max_dense_m (int): Largest grid size for dense references. Defaults to 256.
            reference_policy (str): How references are obtained. Defaults to 'checkpoint'.
            workers (int): Concurrent sweep cells. Defaults to 4.
            checkpoint_dir (str): Where reference checkpoints are stored.
            order_cap (float): Order estimates above this magnitude are excluded from statistics.
            order_underflow (float): Smallest admissible Runge denominator.
            record_runtime (bool): Whether the CSV carries cell runtimes.
            csv_columns (list): The fixed CSV schema.
        }
    """
    reports: dict
    """
    Configuration for printable reports.
    ::
        {
            indent_length (int): Number of spaces to indent report rows. Defaults to 4.
            column_width (int): Width of each printed column. Defaults to 14.
        }
    """
    hashing: dict
    """
    Configuration for the content hashes of reference checkpoints.
    ::
        {
            salt (str): The initial value for the hashing. Defaults to 'lowrank strang'.
            algorithm (str): The hashlib algorithm used. Defaults to 'sha256'.
        }
    """
    database: dict
    """
    The checkpoint catalog configuration.
    ::
        {
            url (str): SqlAlchemy url template, formatted with the checkpoint directory.
            echo (bool): Whether to output the SqlAlchemy generated queries to the console.
        }
    """
    logging: dict
    """
    Logging configuration applied by the command line interface.
    ::
        {
            level (str): The logging level name. Defaults to 'INFO'.
            format (str): The log record format.
        }
    """

    def __init__(self, config_file) -> None:
        with open(config_file, "r", -1, "UTF-8") as f:
            configuration = toml.load(f)
            for k, v in configuration.items():
                setattr(self, k, v)

    def configure_linalg(
        self, dtype="float64", orth_tol=1e-12, orthonormality_tol=1e-10
    ) -> None:
        """
        Configures the dense linear algebra.

        Args:
            dtype (str): The numpy scalar type. Use 'complex128' for the complex field.
            orth_tol (float): Relative residual below which orth drops a column.
            orthonormality_tol (float): Tolerance of the factor validator.
        """
        self.linalg["dtype"] = dtype
        self.linalg["orth_tol"] = orth_tol
        self.linalg["orthonormality_tol"] = orthonormality_tol

    def configure_integrators(
        self, inner_substeps=1, max_steps=100000000, step_ratio_tol=1e-9
    ) -> None:
        """
        Configures time stepping.

        Args:
            inner_substeps (int): Heun steps per K, L and S integration. Defaults to 1.
            max_steps (int): Largest admissible number of steps. Defaults to 1e8.
            step_ratio_tol (float): Integer detection tolerance for (T - t0) / tau.
        """
        self.integrators["inner_substeps"] = inner_substeps
        self.integrators["max_steps"] = max_steps
        self.integrators["step_ratio_tol"] = step_ratio_tol

    def configure_harness(self, **settings) -> None:
        """
        Overrides harness settings, e.g. ``configure_harness(workers=1, tau_ref=2e-5)``.

        Args:
            settings (dict): Harness keys and their new values.
        """
        self.harness.update(settings)

    def configure_database(self, url, echo=False) -> None:
        """
        Configures the checkpoint catalog database.

        Args:
            url (str): SqlAlchemy url template; '{directory}' is replaced by the checkpoint directory.
            echo (bool): Whether to output the SqlAlchemy generated queries to the console.
        """
        self.database["url"] = url
        self.database["echo"] = echo

    def configure_logging(
        self, level="INFO", fmt="%(asctime)s %(levelname)s %(name)s: %(message)s"
    ) -> None:
        """
        Configures logging.

        Args:
            level (str): The logging level name. Defaults to 'INFO'.
            fmt (str): The log record format.
        """
        self.logging["level"] = level
        self.logging["format"] = fmt


default_configuration = os.path.join(
    pathlib.Path(__file__).parent.parent.resolve(), "config.toml"
)
config = Config(config_file=default_configuration)
"""The default configuration"""
