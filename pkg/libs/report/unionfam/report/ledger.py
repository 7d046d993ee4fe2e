import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, TextIO, Union

import h5py
import numpy as np

PATH = Union[str, bytes, os.PathLike]

SCHEMA_VERSION = 1
PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
VERDICTS = (PASS, FAIL, SKIPPED)

# skipped records whose reason starts with this exit with code 2
BUDGET_REASON = "budget exhausted"


# fields are tagged by kind so the h5 archive knows how to store
# them: text columns as strings, payload columns as JSON, and
# metadata as file attributes
def text():
    return field(metadata={"kind": "text"}, default_factory=_empty)


def payload():
    return field(metadata={"kind": "payload"}, default_factory=_empty)


def metadata(default=None):
    return field(metadata={"kind": "metadata"}, default=default)


def _empty() -> np.ndarray:
    return np.empty((0,), dtype=object)


def _column(values: Iterable[Any]) -> np.ndarray:
    # assign elementwise so list-valued entries stay single objects
    values = list(values)
    column = np.empty((len(values),), dtype=object)
    for i, value in enumerate(values):
        column[i] = value
    return column


def _encode(value: Any) -> str:
    return json.dumps(value, sort_keys=True)


@dataclass
class CheckLedger:
    """
    Column store of verification records. Each record says which
    check ran, the claim it tests, on what parameters, what was
    expected and found, and the resulting verdict.
    """

    check_id: np.ndarray = text()
    claim: np.ndarray = text()
    parameters: np.ndarray = payload()
    expected: np.ndarray = payload()
    actual: np.ndarray = payload()
    verdict: np.ndarray = text()
    reason: np.ndarray = text()

    tool_version: Optional[str] = metadata()
    schema: int = metadata(SCHEMA_VERSION)
    config: Optional[Dict[str, Any]] = metadata()

    def __post_init__(self):
        # every column has to have the same length
        _length = None
        for key in self._get_columns():
            value = _column(getattr(self, key))
            setattr(self, key, value)

            if _length is None:
                _length = len(value)
            elif len(value) != _length:
                raise ValueError(
                    "Field {} has {} entries, expected {}".format(
                        key, len(value), _length
                    )
                )
        self._length = _length or 0

        for verdict in self.verdict:
            if verdict not in VERDICTS:
                raise ValueError(f"Unknown verdict {verdict!r}")

    def __len__(self):
        return self._length

    @classmethod
    def _get_columns(cls):
        columns = []
        for k, v in cls.__dataclass_fields__.items():
            if v.metadata["kind"] != "metadata":
                columns.append(k)
        return columns

    def _get_metadata(self):
        return {
            k: getattr(self, k)
            for k, v in self.__dataclass_fields__.items()
            if v.metadata["kind"] == "metadata"
        }

    def __iter__(self):
        columns = self._get_columns()
        return map(
            lambda i: {k: self.__dict__[k][i] for k in columns},
            range(len(self)),
        )

    def __getitem__(self, idx):
        kwargs = self._get_metadata()
        for key in self._get_columns():
            value = getattr(self, key)[idx]
            if not isinstance(value, np.ndarray):
                value = _column([value])
            kwargs[key] = value
        return type(self)(**kwargs)

    def add(
        self,
        check_id: str,
        claim: str,
        parameters: Dict[str, Any],
        expected: Any,
        actual: Any,
        verdict: Optional[str] = None,
        reason: str = "",
    ) -> str:
        """
        Append one record. With no explicit verdict the record
        passes exactly when `actual == expected`.

        Returns:
            The verdict that was recorded
        """
        if verdict is None:
            verdict = PASS if actual == expected else FAIL
        record = type(self)(
            [check_id],
            [claim],
            [parameters],
            [expected],
            [actual],
            [verdict],
            [reason],
            **self._get_metadata(),
        )
        self.append(record)
        return verdict

    def skip(
        self,
        check_id: str,
        claim: str,
        parameters: Dict[str, Any],
        expected: Any,
        reason: str,
    ) -> None:
        self.add(check_id, claim, parameters, expected, None, SKIPPED, reason)

    def skip_for_budget(
        self,
        check_id: str,
        claim: str,
        parameters: Dict[str, Any],
        expected: Any,
        nodes: int,
    ) -> None:
        reason = f"{BUDGET_REASON} after {nodes} nodes"
        self.skip(check_id, claim, parameters, expected, reason)

    @classmethod
    def compare_metadata(cls, key, ours, theirs):
        if ours is None:
            return theirs
        elif theirs is None:
            return ours
        elif ours != theirs:
            raise ValueError(
                "Can't append {} with {} value {} "
                "when ours is {}".format(cls.__name__, key, theirs, ours)
            )
        return ours

    def append(self, other: "CheckLedger") -> None:
        if not isinstance(other, type(self)):
            raise TypeError(
                "Can't append object of type {} to {}".format(
                    type(other), type(self)
                )
            )

        new_dict = {}
        for key, attr in self.__dataclass_fields__.items():
            ours = getattr(self, key)
            theirs = getattr(other, key)
            if attr.metadata["kind"] == "metadata":
                new_dict[key] = self.compare_metadata(key, ours, theirs)
            elif len(ours) == 0:
                new_dict[key] = theirs
            else:
                new_dict[key] = np.concatenate([ours, theirs])

        self.__dict__.update(new_dict)
        self.__post_init__()

    def sorted(self) -> "CheckLedger":
        """Records ordered by check id, then by their parameters"""
        keys = [
            (check_id, _encode(params))
            for check_id, params in zip(self.check_id, self.parameters)
        ]
        idx = sorted(range(len(self)), key=keys.__getitem__)
        return self[np.array(idx, dtype=int)]

    @property
    def counts(self) -> Dict[str, int]:
        verdicts = list(self.verdict)
        return {verdict: verdicts.count(verdict) for verdict in VERDICTS}

    @property
    def exit_code(self) -> int:
        if FAIL in self.verdict:
            return 1
        for verdict, reason in zip(self.verdict, self.reason):
            if verdict == SKIPPED and reason.startswith(BUDGET_REASON):
                return 2
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tool_version": self.tool_version,
            "schema": self.schema,
            "config": self.config,
            "summary": self.counts,
            "records": list(self.sorted()),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        columns = self._get_columns()
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for record in self.sorted():
            row = []
            for key in columns:
                value = record[key]
                if self.__dataclass_fields__[key].metadata["kind"] == "text":
                    row.append(value)
                else:
                    row.append(_encode(value))
            writer.writerow(row)
        return stream.getvalue()

    def to_markdown(self) -> str:
        counts = self.counts
        lines = [
            f"# unionfam report (tool {self.tool_version}, "
            f"schema {self.schema})",
            "",
            "{pass} passed, {fail} failed, {skipped} skipped".format(
                **counts
            ),
            "",
            "| check | parameters | expected | actual | verdict |",
            "|---|---|---|---|---|",
        ]
        for record in self.sorted():
            verdict = record["verdict"]
            if record["reason"]:
                verdict += f" ({record['reason']})"
            cells = [
                record["check_id"],
                _encode(record["parameters"]),
                _encode(record["expected"]),
                _encode(record["actual"]),
                verdict,
            ]
            cells = [cell.replace("|", "\\|") for cell in cells]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    def dump(self, format: str, stream: TextIO) -> None:
        writers = {
            "json": self.to_json,
            "csv": self.to_csv,
            "md": self.to_markdown,
        }
        try:
            writer = writers[format]
        except KeyError:
            raise ValueError(
                "Unknown report format {}, expected one of {}".format(
                    format, ", ".join(writers)
                )
            ) from None
        stream.write(writer())

    def write(self, fname: PATH) -> None:
        """Archive the ledger to an h5 file"""
        with h5py.File(fname, "w") as f:
            f.attrs["length"] = len(self)
            records = f.create_group("records")
            for key, attr in self.__dataclass_fields__.items():
                value = getattr(self, key)
                kind = attr.metadata["kind"]
                if kind == "metadata":
                    if value is not None:
                        f.attrs[key] = _encode(value)
                    continue

                if kind == "payload":
                    value = [_encode(v) for v in value]
                records.create_dataset(
                    key,
                    data=np.array(list(value), dtype=object),
                    dtype=h5py.string_dtype(),
                )

    @classmethod
    def read(cls, fname: PATH) -> "CheckLedger":
        with h5py.File(fname, "r") as f:
            try:
                records = f["records"]
            except KeyError:
                raise ValueError(
                    f"Archive {f.filename} has no records group"
                ) from None

            kwargs = {}
            for key, attr in cls.__dataclass_fields__.items():
                kind = attr.metadata["kind"]
                if kind == "metadata":
                    try:
                        kwargs[key] = json.loads(f.attrs[key])
                    except KeyError:
                        kwargs[key] = None
                    continue

                try:
                    values = list(records[key].asstr()[:])
                except KeyError:
                    raise ValueError(
                        "Records group of archive {} has no "
                        "dataset {}".format(f.filename, key)
                    ) from None
                if kind == "payload":
                    values = [json.loads(v) for v in values]
                kwargs[key] = values
        return cls(**kwargs)
