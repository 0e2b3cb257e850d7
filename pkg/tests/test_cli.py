"""Unit tests for configuration, the result cache and the command line."""

import json
import tempfile
from pathlib import Path

import pytest

from src.algebra import FieldTag
from src.cli import (
    CONVENTION_VERSION,
    DESK_CABLE_CROSSINGS,
    MAX_CABLE_CROSSINGS,
    ResultCache,
    cable_crossings,
    crossing_limit,
    feasible,
    homology_meta,
    run_suite,
    sized,
)
from src.cli.suites import _run, colored_checks
from src.colored import Variant
from src.config import Config
from src.diagram import load_knot
from src.main import main
from src.oracle import jones

ENV = ["CHROMAKH_CACHE_DIR", "CHROMAKH_FIELD", "CHROMAKH_VARIANT", "CHROMAKH_SEED", "CHROMAKH_NO_CACHE"]


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ENV:
        monkeypatch.delenv(name, raising=False)


class TestConfig:
    """Tests for configuration management."""

    def test_config_defaults(self):
        """Test default configuration values."""
        config = Config()
        assert config.field == "q"
        assert config.variant == "contract_full"
        assert config.check_invariants is True
        assert config.enable_caching is True
        assert config.cache_dir == ".chromakh-cache"
        assert config.seed == 0
        assert config.max_n == 8
        assert config.max_cable_crossings == MAX_CABLE_CROSSINGS
        assert config.d_squared_limit == 20000
        assert config.desk is False
        assert config.verbose is False

    def test_config_validation_invalid_field(self):
        """Test configuration validation for an invalid field."""
        config = Config()
        config.field = "z3"
        with pytest.raises(ValueError, match="Invalid field"):
            config._validate_config()

    def test_config_validation_invalid_variant(self):
        config = Config()
        config.variant = "sideways"
        with pytest.raises(ValueError, match="Invalid variant"):
            config._validate_config()

    def test_config_validation_negative_max_n(self):
        config = Config()
        config.max_n = -1
        with pytest.raises(ValueError, match="Invalid max_n"):
            config._validate_config()

    def test_config_validation_negative_limits(self):
        config = Config()
        config.d_squared_limit = -1
        with pytest.raises(ValueError, match="Invalid d_squared_limit"):
            config._validate_config()
        config = Config()
        config.max_cable_crossings = -1
        with pytest.raises(ValueError, match="Invalid max_cable_crossings"):
            config._validate_config()

    def test_config_from_yaml(self):
        """Test loading sections from a YAML file."""
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / "chromakh.yaml"
            path.write_text(
                "computation:\n  field: f2\n  variant: expand_full\n  d_squared_limit: 0\n"
                "cache:\n  enabled: false\n"
                "verify:\n  max_n: 3\n  max_cable_crossings: 16\n"
            )
            config = Config(str(path))
        assert config.field == "f2"
        assert config.variant == "expand_full"
        assert config.enable_caching is False
        assert config.max_n == 3
        assert config.d_squared_limit == 0
        assert config.max_cable_crossings == 16

    def test_config_from_environment(self, monkeypatch):
        """Test environment overrides."""
        monkeypatch.setenv("CHROMAKH_FIELD", "f2")
        monkeypatch.setenv("CHROMAKH_SEED", "7")
        monkeypatch.setenv("CHROMAKH_NO_CACHE", "1")
        config = Config()
        assert config.field == "f2"
        assert config.seed == 7
        assert config.enable_caching is False

    def test_invalid_environment_value(self, monkeypatch):
        monkeypatch.setenv("CHROMAKH_FIELD", "reals")
        with pytest.raises(ValueError):
            Config()


class TestResultCache:
    """Tests for the content-addressed result cache."""

    def _config(self, tmpdir):
        config = Config()
        config.cache_dir = tmpdir
        return config

    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            meta = {"diagram": "trefoil", "colors": [2]}
            ResultCache(self._config(tmpdir)).put(meta, {"betti": []})
            fresh = ResultCache(self._config(tmpdir))
            assert fresh.get(meta) == {"betti": []}
            entry = json.loads(fresh.path_for(meta).read_text())
            assert entry["meta"]["convention_version"] == CONVENTION_VERSION

    def test_key_depends_on_inputs(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            cache = ResultCache(self._config(tmpdir))
            assert cache.key({"colors": [1]}) != cache.key({"colors": [2]})
            assert cache.key({"a": 1, "b": 2}) == cache.key({"b": 2, "a": 1})

    def test_corrupt_entry_is_a_miss(self):
        """A damaged entry is ignored so the result gets recomputed."""
        with tempfile.TemporaryDirectory() as tmpdir:
            meta = {"colors": [3]}
            cache = ResultCache(self._config(tmpdir))
            cache.path_for(meta).write_text("{not json")
            assert cache.get(meta) is None

    def test_disabled(self):
        config = Config()
        config.enable_caching = False
        cache = ResultCache(config)
        assert not cache.enabled
        assert cache.path_for({}) is None
        cache.put({"colors": [1]}, {"betti": []})
        assert cache.get({"colors": [1]}) == {"betti": []}

    def test_homology_meta(self):
        meta = homology_meta(load_knot("unknot"), (2,), FieldTag.F2, Variant.EXPAND_FULL, None)
        assert meta["field"] == "f2"
        assert meta["variant"] == "expand_full"
        assert meta["reduced"] is False


class TestSuites:
    def test_cable_crossings(self):
        assert cable_crossings(load_knot("trefoil"), (2,)) == 12
        assert cable_crossings(load_knot("hopf+"), (1, 3)) == 6
        assert feasible(load_knot("trefoil"), (2,))
        assert not feasible(load_knot("figure8"), (2,))
        assert feasible(load_knot("figure8"), (2,), DESK_CABLE_CROSSINGS)
        assert not feasible(load_knot("trefoil"), (3,), DESK_CABLE_CROSSINGS)
        assert MAX_CABLE_CROSSINGS == 12

    def test_desk_raises_the_crossing_limit(self):
        config = Config()
        assert crossing_limit(config) == MAX_CABLE_CROSSINGS
        config.desk = True
        assert crossing_limit(config) == DESK_CABLE_CROSSINGS

    def test_skipped_checks_are_reported(self):
        """A check on a cable over the limit is listed as skipped, not dropped."""
        checks = [
            ("runs", lambda: True),
            sized("too large", load_knot("trefoil"), (3,), DESK_CABLE_CROSSINGS, lambda: True),
        ]
        report = _run("demo", checks, DESK_CABLE_CROSSINGS)
        assert report.passed
        assert not report.complete
        (skipped,) = report.skipped()
        assert skipped["check"] == "too large"
        assert skipped["status"] == "skip"
        assert report.to_json()["complete"] is False

    def test_colored_suite_at_desk_scale(self):
        """The figure-eight 2-cable runs at desk scale; the trefoil 3-cable is still skipped."""
        config = Config()
        config.desk = True
        checks = dict(colored_checks(config))
        assert checks["euler = colored Jones on figure8 colors [2]"] is not None
        assert checks["four variants agree on unknot_kink+ n=3 over f2"] is not None
        assert checks["four variants agree on trefoil n=3 over f2"] is None
        assert checks["colored homology unchanged by reversing the trefoil colors [2]"] is not None

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("everything", Config())

    def test_sl2res_suite(self):
        config = Config()
        config.max_n = 3
        (report,) = run_suite("sl2res", config)
        assert report.passed, report.failures()
        assert report.to_json()["suite"] == "sl2res"


class TestCommandLine:
    """Tests for exit codes and output of ``main``."""

    def test_colored_jones(self, capsys):
        assert main(["colored-jones", "--knot", "unknot", "--color", "2"]) == 0
        assert capsys.readouterr().out.strip() == "q^2 + 1 + q^-2"

    def test_color_zero(self, capsys):
        assert main(["colored-jones", "--knot", "unknot", "--color", "0"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_jones(self, capsys):
        assert main(["jones", "--knot", "trefoil"]) == 0
        assert capsys.readouterr().out.strip() == jones(load_knot("trefoil")).to_text()

    def test_unknown_knot(self, capsys):
        assert main(["jones", "--knot", "nonesuch"]) == 2
        assert "Unknown knot" in capsys.readouterr().err

    def test_bad_colors(self):
        assert main(["colored-jones", "--knot", "hopf+", "--colors", "[1]"]) == 2
        assert main(["colored-jones", "--knot", "unknot", "--colors", "two"]) == 2
        assert main(["colored-jones", "--knot", "unknot", "--color", "-1"]) == 2

    def test_bad_configuration(self, monkeypatch):
        monkeypatch.setenv("CHROMAKH_VARIANT", "sideways")
        assert main(["knots"]) == 2

    def test_missing_pd_file(self):
        assert main(["jones", "--pd", "/nonexistent/diagram.json"]) == 2

    def test_homology(self, capsys):
        assert main(["--no-cache", "homology", "--knot", "unknot", "--color", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["field"] == "q"
        assert data["colors"] == [2]
        assert {(row["i"], row["j"]): row["rank"] for row in data["betti"]} == {
            (0, -2): 1,
            (0, 0): 1,
            (0, 2): 1,
        }

    def test_reduced_homology(self, capsys):
        assert main(["--no-cache", "homology", "--knot", "trefoil", "--reduced"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["field"] == "f2"
        assert data["reduced"] is True
        assert {(row["i"], row["j"]) for row in data["betti"]} == {(0, 2), (2, 6), (3, 8)}

    def test_reduced_needs_contract_full(self):
        args = ["--no-cache", "homology", "--knot", "trefoil", "--reduced", "--variant", "expand_full"]
        assert main(args) == 2

    def test_homology_is_cached(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            args = ["--cache-dir", tmpdir, "homology", "--knot", "unknot_kink+", "--color", "2"]
            out = Path(tmpdir) / "result.json"
            assert main(args + ["--out", str(out)]) == 0
            first = json.loads(out.read_text())
            entries = [p for p in Path(tmpdir).glob("*.json") if p != out]
            assert len(entries) == 1
            assert main(args + ["--out", str(out)]) == 0
            assert json.loads(out.read_text()) == first

    def test_verify_report(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            out = Path(tmpdir) / "report.json"
            assert main(["--max-n", "2", "verify", "sl2res", "--out", str(out)]) == 0
            report = json.loads(out.read_text())
        assert report[0]["suite"] == "sl2res"
        assert report[0]["passed"] is True
        assert "✓ sl2res" in capsys.readouterr().out

    def test_verify_desk(self, capsys, monkeypatch):
        """Skipped checks are listed; with --desk they fail the run."""
        seen = {}

        def fake_run_suite(name, config):
            seen["limit"] = crossing_limit(config)
            return [_run(name, [("runs", lambda: True), ("too large", None)])]

        monkeypatch.setattr("src.cli.commands.run_suite", fake_run_suite)
        assert main(["verify", "colored"]) == 0
        assert "SKIP too large" in capsys.readouterr().out
        assert main(["verify", "colored", "--desk"]) == 1
        assert seen["limit"] == DESK_CABLE_CROSSINGS
        captured = capsys.readouterr()
        assert "✗ colored" in captured.out
        assert "skipped" in captured.err

    def test_verify_desk_flag_is_accepted(self):
        assert main(["--max-n", "2", "verify", "sl2res", "--desk"]) == 0

    def test_knots(self, capsys):
        assert main(["knots"]) == 0
        listing = capsys.readouterr().out
        assert "trefoil" in listing
        assert "hopf+" in listing


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
