from .peeling import PeelingTrace, peel
from .removal import (
    Removal,
    disjoint_pair_bound_holds,
    is_intersecting,
    max_element_degree,
    removal_number,
)
from .setpairs import (
    SetPairSystem,
    longest_set_pair_system,
    max_set_pair_system,
    verify_set_pair_system,
)
