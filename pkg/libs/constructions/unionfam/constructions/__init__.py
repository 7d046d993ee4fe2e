from unionfam.bounds import anchor_width, width_plateau

from .consistency import ConsistencyGrid, consistency_matrix
from .extremal import (
    ExtremalAnchors,
    extremal_anchors,
    extremal_removal_number,
    is_maximal_union_intersecting,
    removal_extremal,
)
from .families import (
    block_family,
    hilton_milner,
    hilton_milner_triangle,
    interval_family,
    spine_family,
    star,
)
from .ranked import ranked_family, ranked_family_plus
from .registry import (
    Construction,
    build_construction,
    generator_names,
)
from .restricted import (
    heavy_elements,
    layered_spine_family,
    padded_spine_family,
    restricted_star,
)
