import json
import os
from pathlib import Path
from typing import IO, Iterable, Iterator, Union

from unionfam.setfam.exceptions import BadParameters
from unionfam.setfam.family import Family, make_family

PATH = Union[str, bytes, os.PathLike]


def family_to_record(F: Family) -> dict:
    return {"n": F.n, "k": F.k, "sets": F.to_lists()}


def family_to_json(F: Family) -> str:
    """One-line JSON record for a family, sets sorted ascending"""
    return json.dumps(family_to_record(F), separators=(",", ":"))


def family_from_record(record: dict) -> Family:
    try:
        n, k, sets = record["n"], record["k"], record["sets"]
    except (KeyError, TypeError):
        raise BadParameters(
            "Family records need 'n', 'k' and 'sets' fields, "
            "got {}".format(record)
        ) from None
    return make_family(int(n), int(k), sets)


def family_from_json(line: str) -> Family:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as e:
        raise BadParameters(f"Malformed family record: {e}") from None
    return family_from_record(record)


def write_families(families: Iterable[Family], f: Union[PATH, IO]) -> None:
    if isinstance(f, (str, bytes, os.PathLike)):
        with open(f, "w") as stream:
            write_families(families, stream)
        return

    for family in families:
        f.write(family_to_json(family) + "\n")


def read_families(fname: PATH) -> Iterator[Family]:
    with open(Path(fname), "r") as f:
        for line in f:
            line = line.strip()
            if line:
                yield family_from_json(line)
