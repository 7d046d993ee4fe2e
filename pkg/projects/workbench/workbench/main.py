import logging
from typing import Callable, Dict, Optional

from unionfam.report import SCHEMA_VERSION, CheckLedger
from unionfam.setfam import Family
from workbench import __version__, suites
from workbench.config import RunConfig

RUNNERS: Dict[str, Callable[[RunConfig, suites.Sink], CheckLedger]] = {
    "construct": suites.construct,
    "bound": suites.bound,
    "verify": suites.verify,
    "search": suites.search,
}


def _discard(F: Family) -> None:
    return None


def run(
    config: RunConfig, sink: Optional[suites.Sink] = None
) -> CheckLedger:
    """
    Run the command `config` describes and collect its records,
    sorted by check id and parameters, into one report.

    Args:
        config: The run to perform
        sink:
            Called with every family the run produces, whether a
            construction, a search witness or a counterexample.
            Families are dropped if it's `None`.

    Raises:
        BadParameters: If the parameters don't fit the target
    """
    logging.info("Running %s %s", config.command, config.target)
    ledger = RUNNERS[config.command](config, sink or _discard)

    report = CheckLedger(
        tool_version=__version__,
        schema=SCHEMA_VERSION,
        config=config.to_dict(),
    )
    report.append(ledger)
    report = report.sorted()

    counts = report.counts
    logging.info(
        "%d passed, %d failed, %d skipped",
        counts["pass"],
        counts["fail"],
        counts["skipped"],
    )
    return report
