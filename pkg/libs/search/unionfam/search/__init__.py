from .branch import ThresholdScan, branch_and_bound_max, threshold_scan
from .constraints import ConstraintSpec, SearchResult, satisfies
from .oracle import MAX_ORACLE_SETS, enumerate_maximal, oracle_max_family
from .sweep import sweep_restricted_star
