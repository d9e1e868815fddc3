import json
import math

import pytest

from superray.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_lines(out):
    return dict(line.split(": ", 1) for line in out.strip().splitlines())


def test_pole_command(capsys):
    code, out, _ = run(capsys, "pole", "--a", "1", "--delta", "1e-3", "--v", "1e-5")
    assert code == 0
    rec = parse_lines(out)
    assert rec["status"] == "pole"
    assert float(rec["x_offset"]) == pytest.approx(5e-11, rel=1e-3)


def test_pole_json_and_energy(capsys):
    code, out, _ = run(capsys, "pole", "--v", "1e-5", "--omega-tilde-ev", "2.0", "--json")
    rec = json.loads(out)
    assert code == 0
    assert rec["pole_energy_ev"] == pytest.approx(2.0 * (1 + rec["x_offset"]))


def test_pole_no_pole(capsys):
    code, out, _ = run(capsys, "pole", "--v", "0")
    assert code == 0
    assert "no_pole" in out


def test_reflect_static_fresnel(capsys):
    code, out, _ = run(capsys, "reflect", "--a", "1", "--delta", "1e-3", "--v", "0", "--omega-x", "1e-3")
    assert code == 0
    n1, n2 = math.sqrt(2 * (1e-3 + 1e-3)), math.sqrt(2e-3)
    assert float(parse_lines(out)["r"]) == pytest.approx((n1 - n2) / (n1 + n2), rel=1e-12)


def test_reflect_all_methods_ev_frequency(capsys):
    code, out, _ = run(capsys, "reflect", "--v", "1e-4", "--omega-ev", "1.01",
                       "--omega-tilde-ev", "1.0", "--method", "all", "--json")
    rec = json.loads(out)
    assert code == 0
    assert rec["full_r"] == pytest.approx(rec["oracle_r"], rel=1e-10)
    assert rec["first_order_r"] == pytest.approx(rec["full_r"], rel=1e-4)


@pytest.mark.parametrize("argv", [
    ["reflect", "--omega-x", "1e-3", "--omega-ev", "1.0", "--omega-tilde-ev", "1.0"],
    ["reflect", "--omega-ev", "1.0"],
    ["reflect"],
    ["nosuch"],
    ["pole", "--bogus", "1"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "fdenom", "--omega-x=-1e-3")
    assert code == 2
    assert "error" in err


def test_missing_config(capsys):
    code, _, err = run(capsys, "sweep", "--config", "missing.cfg")
    assert code == 1
    assert "missing.cfg" in err


def test_bad_config_value(capsys, tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("v_lo = -1\n")
    code, _, err = run(capsys, "sweep", "--config", str(p))
    assert code == 1
    assert "v_lo" in err


def test_sweep_cli_overrides_config(capsys, tmp_path):
    p = tmp_path / "s.cfg"
    p.write_text("[grid]\ndelta_points = 1\ndelta_lo = 1e-3\ndelta_hi = 1e-3\n[output]\nformat = json\n")
    out_file = tmp_path / "rows.csv"
    code, _, _ = run(capsys, "sweep", "--config", str(p), "--format", "csv",
                     "--a-values", "1,2", "--out", str(out_file), "--threads", "2")
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0].startswith("v,delta,a,")
    assert len(lines) == 3


def test_sweep_is_byte_identical(capsys, tmp_path, monkeypatch):
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("SUPERRAY_THREADS", threads)
        f = tmp_path / f"o{threads}.csv"
        assert main(["sweep", "--v-lo", "1e-6", "--v-hi", "1e-4", "--v-points", "4", "--out", str(f)]) == 0
        outs.append(f.read_bytes())
    assert outs[0] == outs[1]


def test_fdenom_and_plot_data(capsys, tmp_path):
    code, out, _ = run(capsys, "fdenom", "--omega-x", "1e-3")
    assert code == 0 and float(parse_lines(out)["f"]) > 0
    plot = tmp_path / "f.txt"
    code, _, _ = run(capsys, "fdenom", "--plot-data", str(plot), "--points", "20")
    assert code == 0
    cols = [tuple(map(float, l.split())) for l in plot.read_text().splitlines()]
    assert len(cols) == 20
    assert cols[0][1] < 0 < cols[-1][1]


def test_epsilon_command(capsys, tmp_path):
    plot = tmp_path / "e.txt"
    code, out, _ = run(capsys, "epsilon", "--a", "1", "--delta", "1e-3", "--omega-x", "1e-3",
                       "--json", "--plot-data", str(plot), "--points", "5")
    rec = json.loads(out)
    assert code == 0
    assert rec["eps1"] == pytest.approx(0.004)
    assert rec["eps2"] == pytest.approx(0.002)
    assert rec["deps_domega"] == pytest.approx(2.0)
    assert len(plot.read_text().splitlines()) == 5


def test_validate_command(capsys):
    code, out, _ = run(capsys, "validate")
    assert code == 0
    assert out.count("[PASS]") == 4


def test_validate_failure_exit_code(capsys, monkeypatch):
    from superray import validation
    bad = validation.CheckResult("forced", False, "forced failure")
    monkeypatch.setattr(validation, "run_all", lambda: [bad])
    code, out, _ = run(capsys, "validate")
    assert code == 3
    assert "[FAIL]" in out
