"""Curriculum document parsing: XML and JSON-lines row formats.

Both formats carry the same fields and must yield identical
ResearcherRecord values for equivalent content; serializers are
provided so fixtures can round-trip.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from enum import Enum
from xml.sax.saxutils import escape

from .errors import InvalidYear, MalformedDocument, MissingRequiredField
from .records import DegreeEntry, Level, ResearcherRecord, SupervisionEntry, check_year


class DocumentFormat(str, Enum):
    XML = "XML"
    JSONL_ROW = "JSONL-row"


def parse_curriculum(document: bytes | str, format: DocumentFormat) -> ResearcherRecord:
    """Parse one curriculum document into a validated ResearcherRecord."""
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    if format is DocumentFormat.XML:
        return _parse_xml(document)
    if format is DocumentFormat.JSONL_ROW:
        return _parse_jsonl_row(document)
    raise ValueError(f"unsupported format: {format!r}")


def _clean(value: str | None) -> str:
    return value.strip() if value else ""


def _opt(value: str | None) -> str | None:
    cleaned = _clean(value)
    return cleaned or None


def _parse_level(raw: str, *, allow_other: bool, context: str) -> Level:
    allowed = {"MSC", "PHD"} | ({"OTHER"} if allow_other else set())
    value = _clean(raw).upper()
    if value not in allowed:
        raise MalformedDocument(f"{context}: level must be one of {sorted(allowed)}, got {raw!r}")
    return Level(value)


def _parse_year(raw: object, context: str) -> int:
    if isinstance(raw, int) and not isinstance(raw, bool):
        return check_year(raw, context)
    try:
        year = int(str(raw).strip())
    except (TypeError, ValueError):
        raise InvalidYear(f"{context}: year is not an integer: {raw!r}") from None
    return check_year(year, context)


# -- XML ----------------------------------------------------------------

def _parse_xml(document: str) -> ResearcherRecord:
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        raise MalformedDocument(f"not well-formed XML: {exc}") from exc
    if root.tag != "curriculum":
        raise MalformedDocument(f"expected <curriculum> root, got <{root.tag}>")

    record_id = _clean(root.get("id"))
    if not record_id:
        raise MissingRequiredField("curriculum has no id attribute")
    name = _clean(root.findtext("name"))
    if not name:
        raise MissingRequiredField(f"curriculum {record_id!r} has no <name>")

    citation_names = tuple(
        part.strip()
        for part in _clean(root.findtext("citation-names")).split(";")
        if part.strip()
    )
    areas = _parse_area_list(root.find("areas"))

    degrees = []
    degrees_el = root.find("degrees")
    if degrees_el is not None:
        for el in degrees_el.findall("degree"):
            degrees.append(
                DegreeEntry(
                    level=_parse_level(el.get("level", ""), allow_other=True, context="degree"),
                    year=_parse_year(el.get("year"), "degree"),
                    supervisor_name=_clean(el.findtext("supervisor")),
                    thesis_title=_opt(el.findtext("thesis")),
                    institution=_opt(el.findtext("institution")),
                    areas=_parse_area_list(el.find("areas")),
                )
            )

    supervisions = []
    supervisions_el = root.find("supervisions")
    if supervisions_el is not None:
        for el in supervisions_el.findall("supervision"):
            supervisee = _clean(el.findtext("supervisee"))
            if not supervisee:
                raise MissingRequiredField(
                    f"curriculum {record_id!r}: supervision has no <supervisee>"
                )
            supervisions.append(
                SupervisionEntry(
                    level=_parse_level(el.get("level", ""), allow_other=False, context="supervision"),
                    year=_parse_year(el.get("year"), "supervision"),
                    supervisee_name=supervisee,
                )
            )

    return ResearcherRecord(
        id=record_id,
        full_name=name,
        citation_names=citation_names,
        institution=_opt(root.findtext("institution")),
        areas=areas,
        degrees=tuple(degrees),
        supervisions_given=tuple(supervisions),
        resume=_opt(root.findtext("resume")),
    )


def _parse_area_list(areas_el: ET.Element | None) -> tuple[str, ...]:
    if areas_el is None:
        return ()
    return tuple(_clean(el.text) for el in areas_el.findall("area") if _clean(el.text))


# -- JSON-lines row -----------------------------------------------------

def _parse_jsonl_row(document: str) -> ResearcherRecord:
    try:
        row = json.loads(document)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not a valid JSON row: {exc}") from exc
    if not isinstance(row, dict):
        raise MalformedDocument("JSON row must be an object")

    record_id = _clean(_str_field(row, "id"))
    if not record_id:
        raise MissingRequiredField("row has no id")
    name = _clean(_str_field(row, "name"))
    if not name:
        raise MissingRequiredField(f"row {record_id!r} has no name")

    degrees = []
    for entry in _list_field(row, "degrees"):
        degrees.append(
            DegreeEntry(
                level=_parse_level(_str_field(entry, "level"), allow_other=True, context="degree"),
                year=_parse_year(entry.get("year"), "degree"),
                supervisor_name=_clean(_str_field(entry, "supervisor")),
                thesis_title=_opt(_str_field(entry, "thesis")),
                institution=_opt(_str_field(entry, "institution")),
                areas=_str_tuple(entry, "areas"),
            )
        )

    supervisions = []
    for entry in _list_field(row, "supervisions"):
        supervisee = _clean(_str_field(entry, "supervisee"))
        if not supervisee:
            raise MissingRequiredField(f"row {record_id!r}: supervision has no supervisee")
        supervisions.append(
            SupervisionEntry(
                level=_parse_level(_str_field(entry, "level"), allow_other=False, context="supervision"),
                year=_parse_year(entry.get("year"), "supervision"),
                supervisee_name=supervisee,
            )
        )

    return ResearcherRecord(
        id=record_id,
        full_name=name,
        citation_names=_str_tuple(row, "citation_names"),
        institution=_opt(_str_field(row, "institution")),
        areas=_str_tuple(row, "areas"),
        degrees=tuple(degrees),
        supervisions_given=tuple(supervisions),
        resume=_opt(_str_field(row, "resume")),
    )


def _str_field(obj: dict, key: str) -> str:
    value = obj.get(key)
    if value is None:
        return ""
    if not isinstance(value, str):
        raise MalformedDocument(f"field {key!r} must be a string, got {type(value).__name__}")
    return value


def _list_field(obj: dict, key: str) -> list[dict]:
    value = obj.get(key, [])
    if not isinstance(value, list) or any(not isinstance(item, dict) for item in value):
        raise MalformedDocument(f"field {key!r} must be a list of objects")
    return value


def _str_tuple(obj: dict, key: str) -> tuple[str, ...]:
    value = obj.get(key, [])
    if not isinstance(value, list) or any(not isinstance(item, str) for item in value):
        raise MalformedDocument(f"field {key!r} must be a list of strings")
    return tuple(item.strip() for item in value if item.strip())


# -- Serialization ------------------------------------------------------

def serialize_curriculum(record: ResearcherRecord, format: DocumentFormat) -> str:
    """Render a record back into a parseable document (inverse of parse)."""
    if format is DocumentFormat.XML:
        return _to_xml(record)
    if format is DocumentFormat.JSONL_ROW:
        return json.dumps(record_to_row(record), ensure_ascii=False, sort_keys=True)
    raise ValueError(f"unsupported format: {format!r}")


def record_to_row(record: ResearcherRecord) -> dict:
    row: dict = {"id": record.id, "name": record.full_name}
    if record.citation_names:
        row["citation_names"] = list(record.citation_names)
    if record.institution:
        row["institution"] = record.institution
    if record.areas:
        row["areas"] = list(record.areas)
    if record.degrees:
        row["degrees"] = [_degree_to_row(d) for d in record.degrees]
    if record.supervisions_given:
        row["supervisions"] = [
            {"level": s.level.value, "year": s.year, "supervisee": s.supervisee_name}
            for s in record.supervisions_given
        ]
    if record.resume:
        row["resume"] = record.resume
    return row


def _degree_to_row(degree: DegreeEntry) -> dict:
    entry: dict = {"level": degree.level.value, "year": degree.year}
    if degree.thesis_title:
        entry["thesis"] = degree.thesis_title
    if degree.supervisor_name:
        entry["supervisor"] = degree.supervisor_name
    if degree.institution:
        entry["institution"] = degree.institution
    if degree.areas:
        entry["areas"] = list(degree.areas)
    return entry


def _to_xml(record: ResearcherRecord) -> str:
    lines = [f'<curriculum id="{escape(record.id, _QUOTE)}">']
    lines.append(f"  <name>{escape(record.full_name)}</name>")
    if record.citation_names:
        joined = "; ".join(record.citation_names)
        lines.append(f"  <citation-names>{escape(joined)}</citation-names>")
    if record.institution:
        lines.append(f"  <institution>{escape(record.institution)}</institution>")
    if record.areas:
        lines.append("  <areas>")
        lines.extend(f"    <area>{escape(area)}</area>" for area in record.areas)
        lines.append("  </areas>")
    if record.degrees:
        lines.append("  <degrees>")
        for degree in record.degrees:
            lines.append(f'    <degree level="{degree.level.value}" year="{degree.year}">')
            if degree.thesis_title:
                lines.append(f"      <thesis>{escape(degree.thesis_title)}</thesis>")
            if degree.supervisor_name:
                lines.append(f"      <supervisor>{escape(degree.supervisor_name)}</supervisor>")
            if degree.institution:
                lines.append(f"      <institution>{escape(degree.institution)}</institution>")
            if degree.areas:
                lines.append("      <areas>")
                lines.extend(f"        <area>{escape(area)}</area>" for area in degree.areas)
                lines.append("      </areas>")
            lines.append("    </degree>")
        lines.append("  </degrees>")
    if record.supervisions_given:
        lines.append("  <supervisions>")
        for entry in record.supervisions_given:
            lines.append(
                f'    <supervision level="{entry.level.value}" year="{entry.year}">'
                f"<supervisee>{escape(entry.supervisee_name)}</supervisee>"
                "</supervision>"
            )
        lines.append("  </supervisions>")
    if record.resume:
        lines.append(f"  <resume>{escape(record.resume)}</resume>")
    lines.append("</curriculum>")
    return "\n".join(lines) + "\n"


_QUOTE = {'"': "&quot;"}
