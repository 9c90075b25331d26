from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class BoundFunction(str, Enum):
    LAMBDA = "lambda"
    MU = "mu"
    NU = "nu"


class BoundRecord(BaseModel):
    """A known interval lower <= f(d, k) <= upper; either end may be open."""

    model_config = ConfigDict(frozen=True)

    function: BoundFunction
    d: int = Field(ge=0)
    k: int = Field(ge=0)
    lower: Optional[int] = None
    upper: Optional[int] = None
    source: Optional[str] = None

    @model_validator(mode="after")
    def check_interval(self) -> "BoundRecord":
        if self.lower is None and self.upper is None:
            raise ValueError("a bound record needs a lower or an upper value")
        return self

    @property
    def ident(self) -> str:
        return self.source or f"{self.function.value}({self.d},{self.k})"


class BoundTable(BaseModel):
    entries: List[BoundRecord] = []


class DerivedBound(BaseModel):
    model_config = ConfigDict(frozen=True)

    function: BoundFunction
    d: int
    k: int
    lower: Optional[int] = None
    upper: Optional[int] = None
    provenance: Tuple[str, ...] = ()
