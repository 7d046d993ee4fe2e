from .ledger import (
    BUDGET_REASON,
    FAIL,
    PASS,
    SCHEMA_VERSION,
    SKIPPED,
    CheckLedger,
)
