# Copyright (c) gauss-maxima developers. All rights reserved.
import pytest


@pytest.fixture(autouse=True)
def isolated_user_config(tmp_path, monkeypatch):
    # keep ~/gauss-maxima.json and exported overrides out of the tests
    monkeypatch.setenv('GAUSS_MAXIMA_TOOLS_CONFIG_JSON', str(tmp_path / 'no-user-config.json'))
    monkeypatch.delenv('GAUSS_MAXIMA_SEED', raising=False)
    monkeypatch.delenv('GAUSS_MAXIMA_WORKERS', raising=False)
