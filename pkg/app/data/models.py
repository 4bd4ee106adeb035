from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, field_validator


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    OUT_OF_CAP = "out-of-cap"


class VerificationReport(BaseModel):
    statement: str
    n: int
    values: Dict[str, int] = {}
    verdict: Verdict
    witnesses: List[str] = []

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


class DimensionRecord(BaseModel):
    degree: int
    model: str
    k: Optional[int] = None
    dim: int


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class RunConfig(BaseModel):
    max_degree: int
    ambient_cap: int
    diagram_degree_cap: int
    verify_degree_cap: int
    format: OutputFormat = OutputFormat.JSON
    snapshot: Optional[str] = None

    @field_validator('max_degree', 'ambient_cap', 'diagram_degree_cap', 'verify_degree_cap')
    @classmethod
    def at_least_one(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be at least 1, got {value}")
        return value
