import io

import pytest

from wglab.cli import PROFILE_HEADER, cli_dispatch


def run_cli(args):
    out = io.StringIO()
    code = cli_dispatch(args, out=out)
    return code, out.getvalue()


def parse_kv(text):
    vals = {}
    for line in text.splitlines():
        if "=" in line:
            key, _, value = line.partition("=")
            vals[key] = value
    return vals


def test_unknown_subcommand_exits_2():
    assert cli_dispatch(["frobnicate"]) == 2


def test_unknown_flag_exits_2():
    assert cli_dispatch(["limit", "--c", "1.0", "--bogus"]) == 2


def test_missing_required_flag_exits_2():
    assert cli_dispatch(["tv", "--n", "2"]) == 2


def test_limit_command():
    code, text = run_cli(["limit", "--c", str(1.0 / 48.0)])
    assert code == 0
    vals = parse_kv(text)
    closed = float(vals["closed_form"])
    quad = float(vals["quadrature"])
    asym = float(vals["asymptote"])
    assert abs(closed - quad) <= 1e-9
    assert closed == pytest.approx(0.8427008, abs=5e-8)
    assert asym > 0


def test_limit_command_bad_c():
    assert cli_dispatch(["limit", "--c", "-1.0"]) == 2


def test_tv_command_deterministic():
    args = ["tv", "--n", "2", "--d", "8", "--samples", "500", "--seed", "7"]
    code1, text1 = run_cli(args)
    code2, text2 = run_cli(args)
    assert code1 == code2 == 0
    assert text1 == text2
    mean = float(parse_kv(text1)["tv_mean"])
    assert 0.0 <= mean <= 1.0


def test_tv_command_sides_differ_but_agree():
    base = ["--n", "1", "--d", "10", "--samples", "20000", "--seed", "1"]
    _, goe = run_cli(["tv", *base, "--side", "goe_side"])
    _, wis = run_cli(["tv", *base, "--side", "wishart_side"])
    assert abs(float(parse_kv(goe)["tv_mean"])
               - float(parse_kv(wis)["tv_mean"])) < 0.03


def test_tv_command_invalid_params_exit_2():
    assert cli_dispatch(["tv", "--n", "4", "--d", "2", "--samples", "10"]) == 2


def test_workers_env_override(monkeypatch):
    monkeypatch.setenv("WGLAB_WORKERS", "junk")
    assert cli_dispatch(["tv", "--n", "2", "--d", "8", "--samples", "10"]) == 2
    monkeypatch.setenv("WGLAB_WORKERS", "0")
    assert cli_dispatch(["tv", "--n", "2", "--d", "8", "--samples", "10"]) == 2


def test_clt_command():
    code, text = run_cli(["clt", "--n", "40", "--reps", "400", "--seed", "1"])
    assert code == 0
    vals = parse_kv(text)
    assert 1.0 < float(vals["c11"]) < 3.0
    assert 3.0 < float(vals["c12"]) < 9.0
    assert 15.0 < float(vals["c22"]) < 33.0


def test_profile_command():
    code, text = run_cli(["profile", "--n", "2", "--d", "8",
                          "--samples", "50", "--seed", "2"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == PROFILE_HEADER
    assert len(lines) == 51
    first = lines[1].split(",")
    assert len(first) == 10
    assert 0.0 <= float(first[-1]) <= 1.0


def test_sweep_command(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    out_dir = tmp_path / "out"
    cfg.write_text(
        "c_grid = 0.25, 0.5, 1.0, 2.0, 4.0\n"
        "n_list = 4\n"
        "samples = 100\n"
        "seed = 5\n"
        f"out_dir = {out_dir}\n")
    assert cli_dispatch(["sweep", "--config", str(cfg)]) == 0
    assert (out_dir / "sweep.csv").exists()
    assert (out_dir / "figure1.svg").exists()


def test_sweep_command_bad_config(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("c_grid = 0.5, 0.25\nn_list = 4\n")
    assert cli_dispatch(["sweep", "--config", str(cfg)]) == 2
    assert cli_dispatch(["sweep", "--config", str(tmp_path / "nope.cfg")]) == 2
