"""
Tests for configuration loading and validation
"""

import pytest

from graphoid_lab.config.manager import ConfigManager
from graphoid_lab.config.validator import ConfigValidator
from graphoid_lab.utils.exceptions import ConfigurationError


def test_defaults(config):
    assert config.get('limits.closure_max_variables') == 10
    assert config.get('limits.trail_cap') == 1_000_000
    assert config.get('numerics.unification_grid') == [-1.0, 0.0, 5.0]
    assert config.get('generators.scheme') == 'pcg64-v1'
    assert config.get('experiments.parallel') is True
    assert config.get('no.such.key', 'fallback') == 'fallback'


def test_project_file_overrides_defaults(tmp_path):
    (tmp_path / '.graphoid-lab.yaml').write_text(
        'limits:\n  trail_cap: 500\nexperiments:\n  parallel: false\n', encoding='utf-8'
    )
    config = ConfigManager(project_root=tmp_path)
    assert config.get('limits.trail_cap') == 500
    assert config.get('experiments.parallel') is False
    assert config.get('limits.closure_max_variables') == 10


def test_explicit_config_path(tmp_path):
    path = tmp_path / 'custom.yaml'
    path.write_text('numerics:\n  gaussian_tolerance: 1.0e-6\n', encoding='utf-8')
    config = ConfigManager(config_path=path, project_root=tmp_path)
    assert config.get('numerics.gaussian_tolerance') == pytest.approx(1e-6)


def test_missing_config_path_raises(tmp_path):
    with pytest.raises(ConfigurationError):
        ConfigManager(config_path=tmp_path / 'absent.yaml', project_root=tmp_path)


def test_environment_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv('GRAPHOID_LAB_LIMITS_TRAIL_CAP', '250')
    monkeypatch.setenv('GRAPHOID_LAB_EXPERIMENTS_PARALLEL', 'off')
    monkeypatch.setenv('GRAPHOID_LAB_NUMERICS_UNIFICATION_GRID', '-2,0,3.5')
    config = ConfigManager(project_root=tmp_path)
    assert config.get('limits.trail_cap') == 250
    assert config.get('experiments.parallel') is False
    assert config.get('numerics.unification_grid') == [-2, 0, 3.5]


def test_overrides_apply_last(tmp_path, monkeypatch):
    monkeypatch.setenv('GRAPHOID_LAB_EXPERIMENTS_MAX_WORKERS', '2')
    config = ConfigManager(project_root=tmp_path, overrides={'experiments.max_workers': 8})
    assert config.get('experiments.max_workers') == 8


def test_invalid_yaml_raises(tmp_path):
    (tmp_path / '.graphoid-lab.yaml').write_text('limits: [unclosed\n', encoding='utf-8')
    with pytest.raises(ConfigurationError):
        ConfigManager(project_root=tmp_path)


@pytest.mark.parametrize('content', [
    'limits:\n  no_such_cap: 3\n',
    'limits:\n  induced_max_variables: 9\n  closure_max_variables: 8\n',
    'numerics:\n  unification_grid: [1.0, 1.0, 2.0]\n',
    'numerics:\n  unification_grid: [0.0, 1.0]\n',
    'generators:\n  max_weight: 0\n',
    'logging:\n  max_file_size: "lots"\n',
    'generators:\n  scheme: "mt19937"\n',
    'experiments:\n  max_workers: 0\n',
])
def test_invalid_config_raises(tmp_path, content):
    (tmp_path / '.graphoid-lab.yaml').write_text(content, encoding='utf-8')
    with pytest.raises(ConfigurationError):
        ConfigManager(project_root=tmp_path)


def test_validator_reports_every_cross_field_error():
    valid, errors = ConfigValidator().validate({
        'limits': {'induced_max_variables': 8, 'closure_max_variables': 7},
        'numerics': {'unification_grid': [0.0, float('inf'), 1.0]},
    })
    assert not valid
    assert len(errors) == 2


def test_to_dict_is_a_copy(config):
    data = config.to_dict()
    data['limits']['trail_cap'] = 1
    assert config.get('limits.trail_cap') == 1_000_000
