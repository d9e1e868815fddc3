import pytest

from superray.config import ConfigError, dumps_config, load_config, loads_config
from superray.sweep import GridRange, SweepConfig

SAMPLE = """\
# sample sweep
[grid]
v_lo = 1e-6
v_hi = 1e-4
v_points = 5
v_spacing = log
delta_lo = 1e-4
delta_hi = 1e-2
delta_points = 3
a_values = 1, 1.0001, 2
n_e_values = 1e20, 1e21   # cm^-3

[solver]
rel_tol = 1e-13

[output]
format = json
"""


def test_empty_file_gives_defaults(tmp_path):
    p = tmp_path / "empty.cfg"
    p.write_text("")
    cfg = load_config(p)
    assert cfg == SweepConfig()
    assert cfg.v_range.values() == [1e-5]
    assert len(cfg.delta_range.values()) == 9
    assert cfg.delta_range.values()[0] == pytest.approx(1e-4)
    assert cfg.delta_range.values()[-1] == pytest.approx(1e-2)
    assert cfg.a_values == (1.0,)
    assert cfg.omega_tilde_ev == (1.0,)


def test_sample_parses():
    cfg = loads_config(SAMPLE)
    assert cfg.v_range == GridRange(1e-6, 1e-4, 5, "log")
    assert cfg.a_values == (1.0, 1.0001, 2.0)
    assert cfg.n_e_values == (1e20, 1e21)
    assert cfg.omega_tilde_ev is None
    assert cfg.rel_tol == 1e-13
    assert cfg.output_format == "json"


def test_dump_load_roundtrip():
    cfg = loads_config(SAMPLE)
    text = dumps_config(cfg)
    assert loads_config(text) == cfg
    assert dumps_config(loads_config(text)) == text
    default_text = dumps_config(SweepConfig())
    assert loads_config(default_text) == SweepConfig()


def test_keys_without_section():
    assert loads_config("a_values = 2\nformat = csv").a_values == (2.0,)


@pytest.mark.parametrize("text, key, line", [
    ("v_lo = -1", "v_lo", 1),
    ("# c\nv_hi = 0.5", "v_hi", 2),
    ("delta_lo = 1e-9", "delta_lo", 1),
    ("bogus = 1", "bogus", 1),
    ("[grid]\nrel_tol = 1e-10", "rel_tol", 2),
    ("v_points = many", "v_points", 1),
    ("format = xml", "format", 1),
    ("a_values = 1, -2", "a_values", 1),
    ("a_values = 1\na_values = 2", "a_values", 2),
])
def test_key_errors(text, key, line):
    with pytest.raises(ConfigError) as exc:
        loads_config(text)
    assert exc.value.key == key
    assert exc.value.line == line
    assert key in str(exc.value)
    assert f"line {line}" in str(exc.value)


@pytest.mark.parametrize("text", ["[nosuch]", "[grid", "just words"])
def test_syntax_errors(text):
    with pytest.raises(ConfigError, match="line 1"):
        loads_config(text)


def test_both_energy_scales_rejected():
    with pytest.raises(ConfigError):
        loads_config("n_e_values = 1e20\nomega_tilde_ev = 1")
