import pytest

from unionfam.setfam import BadParameters
from workbench import RunConfig


def test_defaults():
    config = RunConfig("verify", "peel")
    assert config.seed == 42
    assert config.format == "json"
    assert config.to_dict() == {
        "command": "verify",
        "target": "peel",
        "params": {},
        "seed": 42,
        "format": "json",
        "budget": None,
        "count": None,
    }


def test_free_targets():
    # construct and bound targets are checked by the libraries
    RunConfig("construct", "anything")
    RunConfig("bound", "anything")


@pytest.mark.parametrize(
    "kwargs,match",
    [
        ({"command": "plot", "target": "all"}, "Unknown command"),
        ({"command": "verify", "target": "nope"}, "Unknown verify target"),
        ({"command": "search", "target": "min"}, "Unknown search target"),
        ({"command": "verify", "target": "all", "format": "xml"}, "format"),
        ({"command": "verify", "target": "all", "budget": -1}, "Budget"),
        ({"command": "verify", "target": "all", "count": 0}, "Count"),
    ],
)
def test_bad_config(kwargs, match):
    with pytest.raises(BadParameters, match=match):
        RunConfig(**kwargs)
