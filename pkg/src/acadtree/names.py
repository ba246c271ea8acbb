"""Deterministic name normalization used as the record-linkage key.

No fuzzy matching here: two names link only if they normalize to the
same canonical string.
"""

from __future__ import annotations

import re
import unicodedata
from typing import NewType

from .errors import EmptyName

NormalizedName = NewType("NormalizedName", str)

_WHITESPACE_RUN = re.compile(r"\s+")


def normalize_name(raw: str) -> NormalizedName:
    """Canonicalize a person name for matching.

    Rules, in order: decompose Unicode and drop combining marks; treat
    periods as separators; reorder "Last, First" when the string holds
    exactly one comma; uppercase; collapse whitespace runs.  Idempotent.

    Raises EmptyName when nothing is left after normalization.
    """
    decomposed = unicodedata.normalize("NFKD", raw)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    stripped = stripped.replace(".", " ")
    if stripped.count(",") == 1:
        last, first = stripped.split(",")
        stripped = f"{first} {last}"
    canonical = _WHITESPACE_RUN.sub(" ", stripped).upper().strip()
    if not canonical:
        raise EmptyName(f"name {raw!r} is empty after normalization")
    return NormalizedName(canonical)
