"""
Pydantic models for vanishing / non-vanishing certificates.
"""

from pydantic import BaseModel, Field
from typing import Any, Dict, Optional
from enum import Enum


class Verdict(str, Enum):
    ZERO = "Zero"
    NONZERO = "Nonzero"


class Rule(str, Enum):
    WEIGHT_SET = "WeightSet"
    PRIME_POWER_DEGREE = "PrimePowerDegree"
    FROBENIUS_DEGREE = "FrobeniusDegree"
    HOOK_CHAIN_MISSING = "HookChainMissing"
    PROCESS_VANISHING = "ProcessVanishing"
    SELF_CONJ_ODD = "SelfConjOdd"
    SELF_CONJ_EVEN_BIG_PART = "SelfConjEvenBigPart"
    GAP_INTERVAL = "GapInterval"
    EXACT_MN = "ExactMN"


class Certificate(BaseModel):
    """A claim about chi^alpha(beta) with the data needed to re-check it."""
    alpha: str = Field(description="Character partition, canonical text")
    beta: str = Field(description="Class partition, canonical text")
    verdict: Verdict
    rule: Rule
    witness: Dict[str, Any] = Field(default_factory=dict)
    verified_by_mn: Optional[bool] = Field(
        default=None,
        description="Set when the verdict was re-checked against the exact value",
    )

    @property
    def claims_zero(self) -> bool:
        return self.verdict is Verdict.ZERO

    def agrees_with(self, value: int) -> bool:
        return (value == 0) == self.claims_zero
