import json

import pytest

from razavy_dw.cli import RunConfig, UsageError, main, parse_config, read_config_file


def test_defaults():
    cfg = parse_config(["spectrum"])
    assert cfg == RunConfig(command="spectrum")


def test_flag_beats_config_beats_default(tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("# comment\nalpha = 2\nc=0.5  # trailing\nn-max = 4\n")
    cfg = parse_config(["sweep-n", "--config", str(conf), "--c", "1"])
    assert (cfg.alpha, cfg.c, cfg.n_max, cfg.m) == (2.0, 1.0, 4, 1.0)


@pytest.mark.parametrize("text", ["bogus = 1\n", "alpha\n", "n = two\n"])
def test_bad_config_file(tmp_path, text):
    conf = tmp_path / "bad.conf"
    conf.write_text(text)
    with pytest.raises(UsageError):
        read_config_file(conf)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["spectrum", "--d", "3"],
        ["spectrum", "--n", "11"],
        ["spectrum", "--alpha", "-1"],
        ["evolve", "--packet", "odd"],
        ["spectrum", "--config", "/nonexistent/file"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_computation_error_exits_1(tmp_path, capsys):
    # a single-state basis has no four-term packet
    assert main(["evolve", "--n", "0", "--packet", "four-term", "--out", str(tmp_path)]) == 1
    assert "four-term" in capsys.readouterr().err


def test_spectrum_output(tmp_path, capsys):
    assert main(["spectrum", "--out", str(tmp_path)]) == 0
    assert "T=158.729" in capsys.readouterr().out
    lines = (tmp_path / "spectrum.csv").read_text().splitlines()
    assert lines[0] == "kappa,E_kappa,E_analytic,abs_diff"
    assert len(lines) == 5
    assert all(float(line.split(",")[3]) < 1e-10 for line in lines[1:])


def test_output_is_deterministic(tmp_path):
    for sub in ("a", "b"):
        assert main(["evolve", "--samples", "16", "--grid", "11", "--frames", "3", "--out", str(tmp_path / sub)]) == 0
    for name in ("series.csv", "frames.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    header = (tmp_path / "a" / "series.csv").read_text().splitlines()[0]
    assert header == "t,x_mean,px_mean,y_mean,py_mean,Pr,dx,dpx,dxdpx,gamma_corr"


def test_json_format(tmp_path):
    assert main(["constants", "--format", "json", "--out", str(tmp_path)]) == 0
    records = json.loads((tmp_path / "constants.json").read_text())
    assert records[0]["name"] == "gamma"
    assert records[0]["value"] == pytest.approx(1.13823, abs=1e-5)


def test_sweep_n_summary(tmp_path, capsys):
    argv = ["sweep-n", "--m", "1", "--alpha", "2", "--c", "1", "--n-max", "5", "--jobs", "1"]
    assert main(argv + ["--out", str(tmp_path)]) == 0
    assert "N=5 T=68046.6" in capsys.readouterr().out


def test_minima_summary(tmp_path, capsys):
    assert main(["minima", "--grid", "21", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "U_min=-9.4380 at (1.4120, 1.8959)" in out
    assert (tmp_path / "potential.csv").read_text().count("\n") == 21 * 21 + 1


def test_sweep_c_rows(tmp_path):
    assert main(["sweep-c", "--c-steps", "3", "--jobs", "1", "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "sweep_c.csv").read_text().splitlines()
    assert lines[0] == "param,T,omega1" and len(lines) == 4
