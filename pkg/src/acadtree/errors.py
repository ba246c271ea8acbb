"""Exception types shared across the pipeline."""

from __future__ import annotations


class AcadtreeError(Exception):
    """Base class for all domain errors."""

    code = "ERROR"


class MalformedDocument(AcadtreeError):
    code = "MALFORMED_DOCUMENT"


class MissingRequiredField(AcadtreeError):
    code = "MISSING_REQUIRED_FIELD"


class InvalidYear(AcadtreeError):
    code = "INVALID_YEAR"


class EmptyName(AcadtreeError):
    code = "EMPTY_NAME"


class DuplicateId(AcadtreeError):
    code = "DUPLICATE_ID"


class EmptyCorpus(AcadtreeError):
    code = "EMPTY_CORPUS"


class UnknownEndpoint(AcadtreeError):
    code = "UNKNOWN_ENDPOINT"


class UnknownResearcher(AcadtreeError):
    code = "UNKNOWN_RESEARCHER"


class InvalidExpansion(AcadtreeError):
    code = "INVALID_EXPANSION"


class QueryTooShort(AcadtreeError):
    code = "QUERY_TOO_SHORT"


class BadPagination(AcadtreeError):
    code = "BAD_PAGINATION"


class CorruptRepository(AcadtreeError):
    code = "CORRUPT_REPOSITORY"


class VersionMismatch(AcadtreeError):
    code = "VERSION_MISMATCH"
