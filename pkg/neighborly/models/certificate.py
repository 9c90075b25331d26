from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from neighborly.config import SCHEMA_VERSION


class Claim(str, Enum):
    PROP_LLOM = "prop-llom"
    PROP_PT = "prop-pt"
    TRAVEL = "travel"
    FAMILY_BOARD = "family-board"
    LEMMA_LBASE = "lemma-lbase"
    LEMMA_GENERAL = "lemma-general"
    GALE = "gale"
    GALE_INVERSE = "gale-inverse"
    K_DIVISIBLE = "k-divisible"
    S_K_DIVISIBLE = "s-k-divisible"
    K_NEIGHBOURLY = "k-neighbourly"
    SIGN_FLIP = "sign-flip"
    PROJECTIVE = "projective"
    BOUNDS = "bounds"


class Coverage(BaseModel):
    checked: int = 0
    total: int = 0

    @property
    def complete(self) -> bool:
        return self.checked == self.total


class Certificate(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    claim: Claim
    instance: Dict[str, Any]
    witness: Dict[str, Any] = {}
    verified: bool
    coverage: Coverage = Field(default_factory=Coverage)
    seed: Optional[int] = None
    runtime_ms: int = 0
    summary: Dict[str, Any] = {}

    @property
    def complete(self) -> bool:
        return self.coverage.complete

    @property
    def refuted(self) -> bool:
        return self.complete and not self.verified
