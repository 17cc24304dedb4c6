"""
Pydantic models for symchar JSON output.
"""

from symchar.models.certificate import Certificate, Rule, Verdict
from symchar.models.reports import (
    CharacterRow,
    CoverageRecord,
    GapReport,
    LadderDirection,
    LadderRecord,
    ScanReport,
    TableExport,
    VanishingClass,
)

__all__ = [
    "Certificate",
    "Rule",
    "Verdict",
    "CharacterRow",
    "CoverageRecord",
    "GapReport",
    "LadderDirection",
    "LadderRecord",
    "ScanReport",
    "TableExport",
    "VanishingClass",
]
