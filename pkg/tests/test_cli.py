# tests/test_cli.py - 命令行入口

import json

import pytest

from config import EXIT_OK, EXIT_USAGE
from main import main
from utils.run_config import ConfigError, load_run_config


def test_verify_daha_writes_report(tmp_path, capsys):
    out = tmp_path / "daha.json"
    assert main(["verify", "daha", "--ell", "1", "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["suite"] == "daha"
    assert "X0Y1" in out.read_text(encoding="utf-8")
    assert "全部通过" in capsys.readouterr().out


def test_report_bytes_are_reproducible(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "finite", "--m", "2", "--n", "1", "--ell", "2", "--out", str(first)]) == EXIT_OK
    assert main(["verify", "finite", "--m", "2", "--n", "1", "--ell", "2", "--jobs", "2",
                 "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_toroidal_rank_too_small(capsys):
    assert main(["verify", "toroidal", "--m", "2", "--n", "1"]) == EXIT_USAGE
    assert "κ ≥ 4 required" in capsys.readouterr().out


def test_unknown_config_key(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("m = 3\nflux = 7\n", encoding="utf-8")
    assert main(["verify", "daha", "--config", str(cfg)]) == EXIT_USAGE


def test_config_file_values_are_overridden_by_flags(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("m = 4\nell = 2\nq0 = 5/2\n", encoding="utf-8")
    config = load_run_config({"ell": 1}, str(cfg))
    assert (config.m, config.n, config.ell) == (4, 1, 1)
    assert str(config.q0) == "5/2"


@pytest.mark.parametrize("flags", [{"ell": 0}, {"q0": "1"}, {"mode": "fuzzy"},
                                   {"parity": "++-", "m": 3}])
def test_invalid_settings(flags):
    with pytest.raises(ConfigError):
        load_run_config(flags)


def test_finite_suite_accepts_equal_ranks(tmp_path):
    out = tmp_path / "finite22.json"
    assert main(["verify", "finite", "--m", "2", "--n", "2", "--ell", "2", "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert (report["params"]["m"], report["params"]["n"]) == (2, 2)
    assert report["summary"]["fail"] == 0


def test_daha_formal_zeta_accepts_equal_ranks(tmp_path):
    out = tmp_path / "daha22.json"
    assert main(["verify", "daha", "--m", "2", "--n", "2", "--ell", "1", "--zeta", "formal",
                 "--out", str(out)]) == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["verify", "toroidal", "--m", "2", "--n", "2"],
    ["verify", "rotation", "--m", "2", "--n", "2", "--ell", "1"],
    ["verify", "daha", "--m", "2", "--n", "2", "--ell", "1"],
])
def test_equal_ranks_rejected_where_zeta_is_needed(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert "要求 m ≠ n" in capsys.readouterr().out


def test_equal_ranks_pass_config_validation():
    config = load_run_config({"m": 2, "n": 2})
    assert (config.m, config.n) == (2, 2)


def test_parity_sets_rank():
    config = load_run_config({"parity": "+-+--"})
    assert (config.m, config.n) == (2, 3)


def test_equivalence_range_warning():
    assert load_run_config({"ell": 2}).warnings
    assert not load_run_config({"m": 4, "n": 1, "ell": 1}).warnings


def test_unknown_suite():
    assert main(["verify", "galaxy"]) == EXIT_USAGE


def test_dump_current_table(tmp_path):
    out = tmp_path / "e0.json"
    assert main(["dump", "--op", "E", "--node", "0", "--mode", "1", "--out", str(out)]) == EXIT_OK
    table = json.loads(out.read_text(encoding="utf-8"))
    assert "table" in table
    assert table["mode"] == 1
    assert len(table["table"]) == 4


def test_dump_projector(capsys):
    assert main(["dump", "--op", "P", "--r", "1"]) == EXIT_OK
    table = json.loads(capsys.readouterr().out)
    assert table["ell"] == 2
    assert table["normal_form"]


def test_dump_word_needs_text():
    assert main(["dump", "--op", "word"]) == EXIT_USAGE


def test_dump_plain_matrix(capsys):
    assert main(["dump", "--op", "e", "--node", "1", "--plain"]) == EXIT_OK
    table = json.loads(capsys.readouterr().out)
    assert table["entries"]
