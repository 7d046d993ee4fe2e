import pytest

from unionfam.constructions import build_construction, generator_names
from unionfam.setfam import BadParameters


def test_spine():
    construction = build_construction("spine", n=10, k=3, i=1, t=5)
    assert len(construction.family) == 22
    provenance = construction.provenance()
    assert provenance["generator"] == "spine"
    assert provenance["parameters"] == {"n": 10, "k": 3, "i": 1}
    assert provenance["size"] == 22


def test_removal_extremal_records_anchors():
    construction = build_construction(
        "removal-extremal", n=18, k=3, s=2, t=2, beta=0
    )
    assert len(construction.family) == 84
    assert construction.anchors["anchors"] == [[2, 3, 4], [5, 6, 7]]


def test_errors():
    with pytest.raises(BadParameters, match="Unknown generator"):
        build_construction("nope", n=10, k=3)
    with pytest.raises(BadParameters, match="needs parameter"):
        build_construction("spine", n=10, k=3)


def test_names():
    names = generator_names()
    assert names == sorted(names)
    assert "removal-extremal" in names
    assert len(names) == 12
