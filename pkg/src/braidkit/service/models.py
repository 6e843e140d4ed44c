"""Pydantic request/response models; the wire format of the service and the
schema behind every CLI command's JSON output.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class PolyJSON(BaseModel):
    variable: str
    terms: dict[str, int]


class BraidRequest(BaseModel):
    text: str = ""
    n: Optional[int] = Field(default=None, description="strand-count hint")


class WordProblemResponse(BaseModel):
    n: int
    identity: bool
    pure: bool
    permutation: list[int]
    degree: int


class CompareRequest(BaseModel):
    order: Literal["dehornoy", "pure"]
    left: str
    right: str
    n: Optional[int] = None
    budget: int = 10**6
    truncation: int = 16


class CompareResponse(BaseModel):
    order: str
    result: Literal["LT", "EQ", "GT"]


class BurauResponse(BaseModel):
    n: int
    matrix: list[list[PolyJSON]]


class ModularResponse(BaseModel):
    matrix: list[list[int]]


class JonesResponse(BaseModel):
    n: int
    components: int
    writhe: int
    bracket: PolyJSON
    f: PolyJSON
    jones_q: PolyJSON
    jones: PolyJSON


class CombResponse(BaseModel):
    n: int
    coordinates: list[str]
    linking: dict[str, int]


class TLTerm(BaseModel):
    matching: list[list[int]]
    coeff: PolyJSON


class TLResponse(BaseModel):
    n: int
    terms: list[TLTerm]
    trace: PolyJSON


class FuzzRequest(BaseModel):
    kind: Literal["markov", "order"]
    trials: int = 200
    seed: int = 0
    n_max: int = 4
    len_max: int = 10
    budget: int = 10**6


class FuzzResponse(BaseModel):
    kind: str
    trials: int
    violations: int
    first_counterexample: Optional[str] = None


class ErrorResponse(BaseModel):
    code: int
    message: str


class HealthResponse(BaseModel):
    status: str
    version: str
