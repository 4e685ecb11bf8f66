# tests.conftest


import os
import pytest

from qpkit.io import read_json
from qpkit.qp import qp_from_dict


HERE = os.path.dirname(os.path.abspath(__file__))


def fixture_path(name):
    return os.path.join(HERE, name)


@pytest.fixture
def e1():
    return qp_from_dict(read_json(fixture_path("e1.json")))


@pytest.fixture
def e2():
    return qp_from_dict(read_json(fixture_path("e2.json")))


@pytest.fixture(autouse=True)
def no_user_config(monkeypatch, tmp_path):
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("QPKIT_CONFIG", raising=False)
