"""
Command line entry points. Reports go to `output`, or stdout
if it isn't given, as JSON, CSV or markdown, or as an h5 archive
when `output` ends in `.h5`. Families a run produces are written
as JSON lines to `families`.

Every script returns the report's exit code: 0 when every check
passed, 1 when any failed, 2 when some check ran out of budget,
and 64 for bad arguments.
"""

import logging
import sys
from contextlib import ExitStack
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, TextIO

from typeo import scriptify

from unionfam.logging import configure_logging
from unionfam.setfam import Family, write_families
from workbench.config import RunConfig
from workbench.main import run

USAGE_ERROR = 64


def _sets(values: Optional[Iterable[str]]) -> Optional[List[List[int]]]:
    """Parse comma separated sets like `2,3,4`"""
    if values is None:
        return None
    try:
        return [[int(x) for x in value.split(",")] for value in values]
    except ValueError:
        raise ValueError(
            "Sets must be comma separated integers, got {}".format(
                list(values)
            )
        ) from None


def _given(**kwargs) -> Dict[str, Any]:
    return {key: value for key, value in kwargs.items() if value is not None}


def _execute(
    command: str,
    target: str,
    params: Dict[str, Any],
    seed: int,
    format: str,
    budget: Optional[int],
    count: Optional[int],
    output: Optional[Path],
    families: Optional[Path],
    family_stream: Optional[TextIO] = None,
    report_to_stdout: bool = True,
) -> int:
    with ExitStack() as stack:
        if families is not None:
            family_stream = stack.enter_context(open(families, "w"))

        def sink(F: Family) -> None:
            if family_stream is not None:
                write_families([F], family_stream)

        try:
            config = RunConfig(
                command, target, params, seed, format, budget, count
            )
            report = run(config, sink)
        except ValueError as e:
            logging.error(str(e))
            return USAGE_ERROR

    if output is not None and output.suffix == ".h5":
        report.write(output)
    elif output is not None:
        with open(output, "w") as f:
            report.dump(format, f)
    elif report_to_stdout:
        report.dump(format, sys.stdout)

    logging.info("Exiting with code %d", report.exit_code)
    return report.exit_code


@scriptify
def construct(
    generator: str,
    n: int,
    k: int,
    i: Optional[int] = None,
    s: Optional[int] = None,
    t: Optional[int] = None,
    beta: Optional[int] = None,
    r: Optional[int] = None,
    center: Optional[int] = None,
    anchors: Optional[List[str]] = None,
    output: Optional[Path] = None,
    families: Optional[Path] = None,
    format: str = "json",
    budget: Optional[int] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> int:
    """
    Build a named family. Unless `families` is given the family
    is written to stdout, and the report is only written if
    `output` is.

    Args:
        generator: Name of the construction to build
        n: Size of the ground set
        k: Size of the member sets
        anchors:
            Anchor sets for the restricted star and ranked
            constructions, each like `2,3,4`
        output: Where to write the report
        families: Where to write the family
        format: Report format, one of `json`, `csv` or `md`
        budget: Node budget for the extremal anchor search
    """
    configure_logging(log_file, verbose)
    try:
        sets = _sets(anchors)
    except ValueError as e:
        logging.error(str(e))
        return USAGE_ERROR

    params = _given(
        n=n, k=k, i=i, s=s, t=t, beta=beta, r=r, center=center, anchors=sets
    )
    return _execute(
        "construct",
        generator,
        params,
        seed=42,
        format=format,
        budget=budget,
        count=None,
        output=output,
        families=families,
        family_stream=sys.stdout,
        report_to_stdout=False,
    )


@scriptify
def bound(
    name: str,
    n: Optional[int] = None,
    k: Optional[int] = None,
    s: Optional[int] = None,
    t: Optional[int] = None,
    beta: Optional[int] = None,
    gamma: Optional[int] = None,
    r: Optional[int] = None,
    sizes: Optional[List[int]] = None,
    i: Optional[int] = None,
    chi: Optional[int] = None,
    eta: Optional[int] = None,
    ell: Optional[int] = None,
    l: Optional[int] = None,  # noqa: E741
    width: Optional[int] = None,
    expected: Optional[int] = None,
    output: Optional[Path] = None,
    format: str = "json",
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> int:
    """
    Evaluate a bound exactly, comparing it with `expected` if
    that's given.
    """
    configure_logging(log_file, verbose)
    params = _given(
        n=n,
        k=k,
        s=s,
        t=t,
        beta=beta,
        gamma=gamma,
        r=r,
        sizes=sizes,
        i=i,
        chi=chi,
        eta=eta,
        ell=ell,
        l=l,
        width=width,
        expected=expected,
    )
    return _execute(
        "bound", name, params, 42, format, None, None, output, None
    )


@scriptify
def verify(
    suite: str,
    seed: int = 42,
    count: Optional[int] = None,
    exhaustive: bool = False,
    output: Optional[Path] = None,
    families: Optional[Path] = None,
    format: str = "json",
    budget: Optional[int] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> int:
    """
    Run a verification suite, or all of them.

    Args:
        suite: Suite name, or `all`
        seed: Seed for the randomized suites
        count: Number of random items, `None` for the full counts
        exhaustive:
            Sweep every anchor family in the restricted star
            suite rather than one per isomorphism class
        output: Where to write the report
        families: Where to write counterexamples
        format: Report format, one of `json`, `csv` or `md`
        budget: Node budget for each exact search
    """
    configure_logging(log_file, verbose)
    params = {"exhaustive": True} if exhaustive else {}
    return _execute(
        "verify", suite, params, seed, format, budget, count, output, families
    )


@scriptify
def search(
    mode: str,
    n: Optional[int] = None,
    k: Optional[int] = None,
    pattern: Optional[List[int]] = None,
    removal_min: Optional[List[int]] = None,
    must_contain: Optional[List[str]] = None,
    must_avoid: Optional[List[str]] = None,
    seconds: Optional[float] = None,
    limit: Optional[int] = None,
    s: Optional[int] = None,
    t: Optional[int] = None,
    beta: Optional[int] = None,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
    output: Optional[Path] = None,
    families: Optional[Path] = None,
    format: str = "json",
    budget: Optional[int] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> int:
    """
    Search for extremal families.

    Args:
        mode:
            `max` for a largest family, `maximal` for every
            maximal family up to isomorphism, `threshold` to scan
            n for where the removal bound is first attained
        pattern: Part sizes of the forbidden multipartite pattern
        removal_min: `r c`, asking for an r-removal number of at least c
        must_contain: Sets every family must include, like `1,2`
        must_avoid: Sets no family may include
        seconds: Wall clock limit for `max`
        limit: Most classes `maximal` may list
        n_min: First n for `threshold`
        n_max: Last n for `threshold`
        output: Where to write the report
        families: Where to write witnesses and maximal families
        format: Report format, one of `json`, `csv` or `md`
        budget: Node budget for each exact search
    """
    configure_logging(log_file, verbose)
    try:
        contain, avoid = _sets(must_contain), _sets(must_avoid)
    except ValueError as e:
        logging.error(str(e))
        return USAGE_ERROR

    params = _given(
        n=n,
        k=k,
        pattern=pattern,
        removal_min=removal_min,
        must_contain=contain,
        must_avoid=avoid,
        seconds=seconds,
        limit=limit,
        s=s,
        t=t,
        beta=beta,
        n_min=n_min,
        n_max=n_max,
    )
    return _execute(
        "search", mode, params, 42, format, budget, None, output, families
    )
