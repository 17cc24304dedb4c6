"""
Pydantic models for table exports, vanishing-class scans and gap reports.

Integers that can exceed 64 bits are carried as decimal strings.
"""

from pydantic import BaseModel, Field
from typing import List
from enum import Enum


class CharacterRow(BaseModel):
    partition: str
    values: List[str] = Field(description="chi(beta) per class column, decimal strings")


class TableExport(BaseModel):
    """Full character table of S_n."""
    n: int = Field(ge=0)
    classes: List[str]
    characters: List[CharacterRow]


class VanishingClass(BaseModel):
    beta: str
    p_adic: bool


class ScanReport(BaseModel):
    """Every p-vanishing class of S_n, flagged by p-adic type."""
    n: int = Field(ge=0)
    p: int
    vacuous: bool = Field(
        default=False,
        description="S_n has no p-singular character, so every class is p-vanishing",
    )
    vanishing: List[VanishingClass] = Field(default_factory=list)
    thm21_violations: List[str] = Field(
        default_factory=list,
        description="p-adic-type classes found not p-vanishing; always empty for a correct engine",
    )

    @property
    def confirmations(self) -> List[str]:
        return [entry.beta for entry in self.vanishing if entry.p_adic]

    @property
    def exceptions(self) -> List[str]:
        """Vanishing classes that are not of p-adic type."""
        return [entry.beta for entry in self.vanishing if not entry.p_adic]


class LadderDirection(str, Enum):
    NORTH = "N"
    EAST = "E"


class LadderRecord(BaseModel):
    v: int = Field(ge=1)
    dir: LadderDirection
    lo: int
    hi: int


class CoverageRecord(BaseModel):
    """How much of the gap set the ladders reach."""
    predicted: int = Field(ge=0)
    gaps: int = Field(ge=0)
    complete: bool


class GapReport(BaseModel):
    alpha: str
    n: int = Field(ge=0)
    G: List[List[int]] = Field(description="Gap set as sorted disjoint [lo, hi] pairs")
    ladders: List[LadderRecord] = Field(default_factory=list)
    predicted_parts: List[int] = Field(default_factory=list)
    coverage: CoverageRecord
