import psutil
import pytest

from unionfam.setfam import BadParameters
from workbench.utils import THREADS_VAR, num_workers


def test_num_workers_from_env(monkeypatch):
    monkeypatch.setenv(THREADS_VAR, "3")
    assert num_workers() == 3


def test_num_workers_defaults_to_cores(monkeypatch):
    monkeypatch.delenv(THREADS_VAR)
    assert num_workers() == (psutil.cpu_count(logical=False) or 1)


@pytest.mark.parametrize("value", ["zero", "0", "-2"])
def test_bad_num_workers(monkeypatch, value):
    monkeypatch.setenv(THREADS_VAR, value)
    with pytest.raises(BadParameters):
        num_workers()
