from .binomial import anchor_width, binomial, width_plateau
from .bounds import (
    BoundInfo,
    BoundQuery,
    BoundValue,
    GeneralBound,
    available_bounds,
    bound_info,
    core_size,
    evaluate_bound,
    hilton_milner_size,
    interval_size,
    restricted_star_size,
    spine_size,
)
