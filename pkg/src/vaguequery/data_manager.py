"""CSV ingestion, attribute classification, and robust column statistics.

A loaded :class:`Dataset` is immutable: attribute profiles carry the
normalized display name, the attribute kind, the name n-grams used for
co-occurrence matching, and (for numeric columns) median/MAD statistics
that drive default filter ranges.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import IngestError, SchemaError, StatsError

# Column names (after normalization) treated as geographic. Checked before
# the numeric rule so coordinate columns are never profiled as plain numbers.
GAZETTEER = frozenset({"latitude", "longitude", "country", "state", "city", "zip"})

# Fraction of non-empty cells that must parse as numbers for a numeric column.
NUMERIC_FRACTION = 0.95


class AttributeKind(str, Enum):
    NUMERIC = "numeric"
    CATEGORICAL = "categorical"
    GEOGRAPHIC = "geographic"


@dataclass(frozen=True)
class NumericStats:
    """Robust summary of a numeric column (nulls excluded)."""

    min: float
    max: float
    median: float
    mad: float
    count: int
    null_count: int


@dataclass(frozen=True)
class AttributeProfile:
    raw_name: str
    display_name: str
    kind: AttributeKind
    stats: NumericStats | None
    ngrams: tuple[str, ...]


@dataclass(frozen=True)
class Dataset:
    name: str
    attributes: tuple[AttributeProfile, ...]
    rows: tuple[dict, ...]

    def attribute(self, display_name: str) -> AttributeProfile:
        for attr in self.attributes:
            if attr.display_name == display_name:
                return attr
        raise KeyError(display_name)

    def numeric_attributes(self) -> tuple[AttributeProfile, ...]:
        return tuple(a for a in self.attributes if a.kind is AttributeKind.NUMERIC)


_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")
_ACRONYM_BOUNDARY = re.compile(r"(?<=[A-Z])(?=[A-Z][a-z])")
_SEPARATORS = re.compile(r"[_\-\s]+")


def normalize_name(raw: str) -> str:
    """Turn a raw column name into lowercase space-separated words.

    "incomePerCapita" -> "income per capita";
    "earthquake_magnitude" -> "earthquake magnitude".
    """
    if not raw or not raw.strip():
        raise ValueError("column name is empty")
    s = _CAMEL_BOUNDARY.sub(" ", raw)
    s = _ACRONYM_BOUNDARY.sub(" ", s)
    s = _SEPARATORS.sub(" ", s)
    return s.strip().lower()


def attribute_ngrams(display_name: str) -> list[str]:
    """All contiguous word subsequences, longest first then left-to-right."""
    words = display_name.split()
    grams: list[str] = []
    seen: set[str] = set()
    for size in range(len(words), 0, -1):
        for start in range(len(words) - size + 1):
            gram = " ".join(words[start : start + size])
            if gram not in seen:
                seen.add(gram)
                grams.append(gram)
    return grams


def compute_stats(values: Sequence[float | None]) -> NumericStats:
    """Median/MAD/min/max over the non-null values of a column."""
    clean = [float(v) for v in values if v is not None]
    if not clean:
        raise StatsError("column has no non-null values")
    arr = np.asarray(clean, dtype=float)
    med = float(np.median(arr))
    mad = float(np.median(np.abs(arr - med)))
    return NumericStats(
        min=float(arr.min()),
        max=float(arr.max()),
        median=med,
        mad=mad,
        count=len(clean),
        null_count=len(values) - len(clean),
    )


def _parse_number(cell: str) -> float | None:
    try:
        return float(cell)
    except ValueError:
        return None


def load_dataset(source: bytes | str | io.IOBase, name: str) -> Dataset:
    """Parse a CSV byte stream (UTF-8, header row required) into a Dataset."""
    text = _read_text(source)
    reader = csv.reader(io.StringIO(text))
    try:
        records = list(reader)
    except csv.Error as exc:
        raise IngestError(str(exc), row=reader.line_num) from exc
    records = [r for r in records if r]  # fully blank lines carry no data
    if not records:
        raise IngestError("file is empty")

    header = records[0]
    display_names = []
    for i, raw in enumerate(header):
        if not raw.strip():
            raise IngestError(f"column {i + 1} has an empty name", row=1)
        display_names.append(normalize_name(raw))
    if len(set(display_names)) != len(display_names):
        dupes = sorted({n for n in display_names if display_names.count(n) > 1})
        raise SchemaError(f"duplicate column names after normalization: {', '.join(dupes)}")

    body = records[1:]
    for row_no, record in enumerate(body, start=2):
        if len(record) != len(header):
            raise IngestError(
                f"expected {len(header)} fields, found {len(record)}", row=row_no
            )

    columns: list[list[str]] = [[rec[i] for rec in body] for i in range(len(header))]
    profiles = []
    parsed_columns: list[list] = []
    for raw, display, cells in zip(header, display_names, columns):
        profile, parsed = _profile_column(raw, display, cells)
        profiles.append(profile)
        parsed_columns.append(parsed)

    rows = tuple(
        {profiles[i].display_name: parsed_columns[i][r] for i in range(len(profiles))}
        for r in range(len(body))
    )
    return Dataset(name=name, attributes=tuple(profiles), rows=rows)


def _profile_column(raw: str, display: str, cells: list[str]):
    non_empty = [c for c in cells if c.strip() != ""]
    numbers = [_parse_number(c) for c in non_empty]
    parseable = sum(1 for n in numbers if n is not None)

    if display in GAZETTEER:
        kind = AttributeKind.GEOGRAPHIC
    elif non_empty and parseable / len(non_empty) >= NUMERIC_FRACTION:
        kind = AttributeKind.NUMERIC
    else:
        kind = AttributeKind.CATEGORICAL

    if kind is AttributeKind.NUMERIC:
        parsed = [_parse_number(c) if c.strip() != "" else None for c in cells]
        stats = compute_stats(parsed)
    else:
        parsed = [c if c.strip() != "" else None for c in cells]
        stats = None

    profile = AttributeProfile(
        raw_name=raw,
        display_name=display,
        kind=kind,
        stats=stats,
        ngrams=tuple(attribute_ngrams(display)),
    )
    return profile, parsed


def _read_text(source: bytes | str | io.IOBase) -> str:
    if isinstance(source, bytes):
        data = source
    elif isinstance(source, str):
        return source
    else:
        data = source.read()
        if isinstance(data, str):
            return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestError(f"not valid UTF-8: {exc}") from exc
