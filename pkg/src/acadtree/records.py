"""Domain types for parsed researcher curricula."""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidYear, MissingRequiredField

MIN_YEAR = 1900


class Level(str, Enum):
    MSC = "MSC"
    PHD = "PHD"
    OTHER = "OTHER"


def max_year() -> int:
    """Latest year accepted at parse time (current year plus one)."""
    return datetime.date.today().year + 1


def check_year(year: int, context: str) -> int:
    if not isinstance(year, int) or isinstance(year, bool):
        raise InvalidYear(f"{context}: year must be an integer, got {year!r}")
    if not MIN_YEAR <= year <= max_year():
        raise InvalidYear(
            f"{context}: year {year} outside [{MIN_YEAR}, {max_year()}]"
        )
    return year


@dataclass(frozen=True)
class DegreeEntry:
    """One academic degree: level, year, and the supervision it records."""

    level: Level
    year: int
    supervisor_name: str = ""
    thesis_title: str | None = None
    institution: str | None = None
    areas: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        check_year(self.year, "degree")


@dataclass(frozen=True)
class SupervisionEntry:
    """One supervision the researcher declares having concluded."""

    level: Level
    year: int
    supervisee_name: str

    def __post_init__(self) -> None:
        if self.level not in (Level.MSC, Level.PHD):
            raise ValueError(f"supervision level must be MSC or PHD, got {self.level}")
        check_year(self.year, "supervision")
        if not self.supervisee_name:
            raise MissingRequiredField("supervision entry has no supervisee name")


@dataclass(frozen=True)
class ResearcherRecord:
    """One parsed curriculum: identity, name variants, degrees, supervisions."""

    id: str
    full_name: str
    citation_names: tuple[str, ...] = ()
    institution: str | None = None
    areas: tuple[str, ...] = ()
    degrees: tuple[DegreeEntry, ...] = ()
    supervisions_given: tuple[SupervisionEntry, ...] = ()
    resume: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise MissingRequiredField("record has no id")
        if not self.full_name:
            raise MissingRequiredField(f"record {self.id!r} has no name")


@dataclass(frozen=True)
class LoadFailure:
    """One file (or jsonl line) that failed to parse during a corpus load."""

    source: str
    error_code: str
    message: str


@dataclass(frozen=True)
class LoadReport:
    files_scanned: int
    records_loaded: int
    failures: tuple[LoadFailure, ...] = field(default=())
