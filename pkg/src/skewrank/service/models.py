"""Request and response models for the analysis service."""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

DEFAULT_ENUM_CAP = 1 << 16
DEFAULT_AMBIENT_CAP = 1 << 24

AnalysisName = Literal["lengths", "degeneracy", "singleton"]


class TowerSpec(BaseModel):
    """The field tower GF(p) <= GF(q) <= GF(q^m) with twist order r and
    block length n.  The optional modulus is the GF(p) coefficient list of
    the ambient modulus, constant first; omitted, the canonical smallest
    irreducible is used."""
    p: int = Field(ge=2)
    e: int = Field(default=1, ge=1)
    m: int = Field(ge=1)
    r: int = Field(default=0, ge=0)
    n: int = Field(ge=1)
    modulus: Optional[list[int]] = None


class GeneratorSpec(BaseModel):
    """How the code is presented: a conventional generator polynomial
    ("conv_poly", text in x), a twisted generator ("lin_poly", text in
    x^[i]), a generator matrix ("matrix", rows of element texts), or the
    exponent set of roots of unity ("root_exponents", integers)."""
    type: Literal["conv_poly", "lin_poly", "matrix", "root_exponents"]
    data: Union[str, list[list[str]], list[int]]


class CodeSpec(BaseModel):
    generator: GeneratorSpec
    n: Optional[int] = Field(default=None, ge=0)


class AnalyzeRequest(BaseModel):
    tower: TowerSpec
    code: CodeSpec
    analyses: Optional[list[AnalysisName]] = None
    enum_cap: int = Field(default=DEFAULT_ENUM_CAP, ge=1)
    ambient_cap: int = Field(default=DEFAULT_AMBIENT_CAP, ge=4)
    seed: int = 0  # reserved; current analyses are fully deterministic


class ShortenRequest(BaseModel):
    tower: TowerSpec
    code: CodeSpec
    enum_cap: int = Field(default=DEFAULT_ENUM_CAP, ge=1)
    ambient_cap: int = Field(default=DEFAULT_AMBIENT_CAP, ge=4)


class GridEntry(BaseModel):
    p: int = Field(ge=2)
    e: int = Field(default=1, ge=1)
    m: int = Field(ge=1)
    r: int = Field(default=0, ge=0)
    lengths: list[int]


class SweepRequest(BaseModel):
    grids: Optional[list[GridEntry]] = None
    enum_cap: int = Field(default=DEFAULT_ENUM_CAP, ge=1)


class ShiftLength(BaseModel):
    a: str
    r: int
    value: Optional[int]


class SkewBounds(BaseModel):
    lower: int
    upper: Optional[int]
    attained: Optional[bool]


class Criterion(BaseModel):
    id: str
    value: bool


class WitnessBody(BaseModel):
    length: int
    rows: list[list[str]]


class SingletonEntry(BaseModel):
    kind: str
    length: int
    ok: bool


class AnalyzeResponse(BaseModel):
    n: int
    k: int
    l_R: Optional[int] = None
    l_P: Optional[int] = None
    rank_length_paths: Optional[dict[str, int]] = None
    period_length_paths: Optional[dict[str, int]] = None
    shift_lengths: Optional[list[ShiftLength]] = None
    skew_bounds: Optional[SkewBounds] = None
    witness: Optional[WitnessBody] = None
    degenerate: Optional[bool] = None
    criteria: Optional[list[Criterion]] = None
    singleton: Optional[list[SingletonEntry]] = None


class ShortenResponse(BaseModel):
    kind: Literal["conv", "twisted"]
    original_length: int
    length: int
    k: int
    rows: list[list[str]]
    generator_closure: str
    check_closure: str


class SweepResponse(BaseModel):
    records: list[dict]
    summary: dict


class HealthResponse(BaseModel):
    status: str
    version: str
