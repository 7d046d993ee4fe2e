import inspect
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from unionfam.constructions.extremal import (
    assemble_extremal,
    extremal_anchors,
)
from unionfam.constructions.families import (
    block_family,
    hilton_milner,
    hilton_milner_triangle,
    interval_family,
    spine_family,
    star,
)
from unionfam.constructions.ranked import ranked_family, ranked_family_plus
from unionfam.constructions.restricted import (
    layered_spine_family,
    padded_spine_family,
    restricted_star,
)
from unionfam.setfam import BadParameters, Family


@dataclass(frozen=True)
class Construction:
    """A generated family plus what it was generated from"""

    name: str
    family: Family
    parameters: Dict[str, Any]
    anchors: Dict[str, Any] = field(default_factory=dict)
    claim: str = ""

    def provenance(self) -> Dict[str, Any]:
        return {
            "generator": self.name,
            "parameters": self.parameters,
            "anchors": self.anchors,
            "size": len(self.family),
        }


def _removal_extremal(n, k, s, t, beta, budget=None):
    found = extremal_anchors(n, k, s, t, beta, budget)
    family = assemble_extremal(n, k, s, found)
    return family, {
        "anchors": [list(a) for a in found.anchors],
        "extras": [list(m) for m in found.extras],
    }


GENERATORS: Dict[str, Callable[..., Family]] = {
    "star": star,
    "hilton-milner": hilton_milner,
    "hilton-milner-triangle": hilton_milner_triangle,
    "spine": spine_family,
    "interval": interval_family,
    "block": block_family,
    "restricted-star": restricted_star,
    "padded-spine": padded_spine_family,
    "layered-spine": layered_spine_family,
    "ranked": ranked_family,
    "ranked-plus": ranked_family_plus,
}

CLAIMS = {
    "star": "all k-sets through a fixed element",
    "hilton-milner": "star sets meeting a fixed set B, plus B",
    "hilton-milner-triangle": "k-sets with two elements in {1, 2, 3}",
    "spine": "intersecting family on a head through 1 and a spine",
    "interval": "two intervals plus the star sets avoiding them",
    "block": "extremal (s,t)-union intersecting block family",
    "restricted-star": "star sets disjoint from at most s - 1 anchors",
    "padded-spine": "spine family padded with t - 1 sets per point",
    "layered-spine": "spine construction moved to the star at r",
    "ranked": "star sets meeting s anchors, the anchors, t - 1 extras",
    "ranked-plus": "the ranked construction over s + 1 anchors",
    "removal-extremal": "largest (s,t)-union intersecting family "
    "with removal number at least s + beta",
}


def generator_names() -> List[str]:
    return sorted(CLAIMS)


def build_construction(name: str, **params) -> Construction:
    """
    Run a named generator, passing through only the parameters
    it accepts, and record its provenance.

    Raises:
        BadParameters: If the generator is unknown or a required
            parameter is missing
    """
    if name not in CLAIMS:
        raise BadParameters(
            "Unknown generator '{}', choose from {}".format(
                name, ", ".join(generator_names())
            )
        )

    fn = _removal_extremal if name == "removal-extremal" else GENERATORS[name]
    signature = inspect.signature(fn)
    kwargs = {
        key: value
        for key, value in params.items()
        if key in signature.parameters and value is not None
    }
    missing = [
        key
        for key, p in signature.parameters.items()
        if p.default is inspect.Parameter.empty and key not in kwargs
    ]
    if missing:
        raise BadParameters(
            "Generator '{}' needs parameter(s) {}".format(
                name, ", ".join(missing)
            )
        )

    anchors = {}
    if name == "removal-extremal":
        family, anchors = fn(**kwargs)
    else:
        family = fn(**kwargs)
    return Construction(name, family, kwargs, anchors, CLAIMS[name])
