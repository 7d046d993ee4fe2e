from .graph import (
    DisjointnessGraph,
    build_graph,
    disjoint_pair_count,
    neighborhood,
)
from .multipartite import (
    ForbiddenWitness,
    contains_complete_multipartite,
    has_r_pairwise_disjoint,
    is_union_intersecting,
    star_count_bound_holds,
)
