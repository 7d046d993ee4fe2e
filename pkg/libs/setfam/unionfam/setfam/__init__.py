from .budget import Budget
from .canonical import CanonicalForm, canonical_form
from .exceptions import (
    AnchorViolation,
    BadParameters,
    BudgetExceeded,
    DuplicateSet,
    ElementOutOfRange,
    EmptyFamily,
    Infeasible,
    LimitExceeded,
    NotAPermutation,
    NotUnionIntersecting,
    ParameterMismatch,
    SizeMismatch,
    TheoremViolation,
    TooLarge,
    WrongSetSize,
)
from .family import Family, KSet, apply_permutation, make_family
from .io import (
    family_from_json,
    family_from_record,
    family_to_json,
    family_to_record,
    read_families,
    write_families,
)
from .isomorphism import is_isomorphic
