"""Request and response models shared by the HTTP service and the CLI client."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

EquivalenceName = Literal["full", "parabolic"]
SuiteName = Literal["solomon", "lemma22", "theorem21", "well-defined", "theorem25", "all"]


class RepsRequest(BaseModel):
    rank: int = Field(ge=1)
    target: str
    context: str = "full"
    equivalence: EquivalenceName = "full"


class ConstantsRequest(BaseModel):
    rank: int = Field(ge=1)
    j: str
    k: str
    context: str | None = None
    equivalence: EquivalenceName = "full"


class ClassTableRequest(BaseModel):
    rank: int = Field(ge=1)
    equivalence: EquivalenceName = "full"


class ParabolicTableRequest(BaseModel):
    rank: int = Field(ge=1)
    j: str
    equivalence: EquivalenceName = "full"


class InduceRequest(BaseModel):
    rank: int = Field(ge=1)
    lower: str
    upper: str = "full"
    k: str
    equivalence: EquivalenceName = "full"


class RestrictRequest(BaseModel):
    rank: int = Field(ge=1)
    lower: str
    upper: str = "full"
    k: str
    alt: bool = False
    equivalence: EquivalenceName = "full"


class VerifyRequest(BaseModel):
    rank: int = Field(ge=1)
    suite: SuiteName = "all"
    context: str | None = None
    equivalence: EquivalenceName = "full"


class TableResponse(BaseModel):
    rank: int
    command: str
    equivalence: EquivalenceName
    params: dict[str, Any]
    columns: list[str]
    rows: list[dict[str, Any]]
    basis: list[dict[str, Any]] | None = None


class SuiteModel(BaseModel):
    name: str
    ok: bool
    cases: int
    counterexamples: list[dict[str, Any]]


class VerifyResponse(BaseModel):
    rank: int
    command: str
    equivalence: EquivalenceName
    ok: bool
    suites: list[SuiteModel]


class HealthResponse(BaseModel):
    status: str
    version: str
    rank_cap: int


class ErrorBody(BaseModel):
    code: str
    message: str
