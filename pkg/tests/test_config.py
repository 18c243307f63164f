from lowrank_strang.config import Config, config, default_configuration


def test_default_configuration():
    """Tests the values shipped in config.toml"""
    assert config.linalg["dtype"] == "float64"
    assert config.integrators["inner_substeps"] == 1
    assert config.harness["csv_columns"] == [
        "problem", "m", "scheme", "tau", "rank_or_theta", "error", "order", "runtime_ms", "seed"
    ]
    assert config.harness["reference_policy"] == "checkpoint"
    assert config.problems["benchmarks"]["CUBIC"]["alpha"] == 0.02
    assert config.problems["benchmarks"]["LYAP_RANDOM"]["initial_rank"] == 10


def test_custom_configuration(tmp_path):
    """Tests loading a custom file and the configure helpers"""
    path = tmp_path / "config.toml"
    path.write_text(
        open(default_configuration, encoding="UTF-8").read().replace("m = 128", "m = 32")
    )
    custom = Config(config_file=path)
    assert custom.harness["m"] == 32

    custom.configure_harness(workers=1, tau_ref=2e-5)
    assert custom.harness["workers"] == 1 and custom.harness["tau_ref"] == 2e-5

    custom.configure_integrators(inner_substeps=4)
    assert custom.integrators["inner_substeps"] == 4
    assert config.integrators["inner_substeps"] == 1

    custom.configure_database("sqlite:///{directory}/other.sqlite", echo=True)
    assert custom.database["echo"]
