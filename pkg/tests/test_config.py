import pytest

from hydrocomplex.config import WORKERS_ENV, Settings, load_config, resolve_settings
from hydrocomplex.quadrature import QuadratureSpec


def test_defaults():
    settings = resolve_settings(environ={})
    assert settings == Settings()
    assert settings.quadrature == QuadratureSpec()
    assert settings.workers == 0


def test_load_config(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# tolerances\nrel_tol = 1e-9\n\nmax_panels=512  # budget\ngate = 1e-5\n")
    assert load_config(path) == {'rel_tol': 1e-9, 'max_panels': 512, 'gate': 1e-5}


@pytest.mark.parametrize("text", ["colour = red\n", "rel_tol\n", "max_panels = many\n"])
def test_bad_config(tmp_path, text):
    path = tmp_path / "bad.cfg"
    path.write_text(text)
    with pytest.raises(ValueError):
        load_config(path)


def test_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("rel_tol = 1e-9\nworkers = 2\ngate = 1e-5\n")
    settings = resolve_settings(path, environ={WORKERS_ENV: '3'}, overrides={'gate': 1e-4, 'workers': None})
    assert settings.quadrature.rel_tol == 1e-9
    assert settings.workers == 3
    assert settings.gate == 1e-4
    assert resolve_settings(path, environ={WORKERS_ENV: '3'}, overrides={'workers': 5}).workers == 5


def test_environment_sets_workers_only():
    settings = resolve_settings(environ={WORKERS_ENV: '4', 'HYDROCOMPLEX_REL_TOL': '1e-3'})
    assert settings.workers == 4
    assert settings.quadrature == QuadratureSpec()


def test_invalid_values(tmp_path):
    with pytest.raises(ValueError):
        resolve_settings(environ={}, overrides={'workers': -1})
    with pytest.raises(ValueError):
        resolve_settings(environ={}, overrides={'max_panels': 4})
    with pytest.raises(ValueError):
        resolve_settings(environ={}, overrides={'threads': 2})
