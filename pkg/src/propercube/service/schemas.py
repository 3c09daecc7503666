"""Pydantic request/response models for the HTTP API.

Path counts grow factorially, so every count field travels as a decimal
string; JSON numbers would silently lose precision in most consumers.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core import Coloring, Vertex, parse_coloring
from ..verify import parse_colorings_spec


class PairQuery(BaseModel):
    n: int = Field(ge=2, description="dimension count")
    coloring: str = Field(description='coloring spec: "j=K" or class-1 dimensions "1,2,5"')
    u: str = Field(description="bit string, dimension 1 leftmost")
    v: str = Field(description="bit string, dimension 1 leftmost")

    @model_validator(mode="after")
    def _parseable(self) -> "PairQuery":
        self.to_domain()  # raises ValueError -> 422 with the parse message
        return self

    def to_domain(self) -> tuple[Vertex, Vertex, Coloring]:
        u = Vertex.from_string(self.u)
        v = Vertex.from_string(self.v)
        c = parse_coloring(self.n, self.coloring)
        if not (u.n == v.n == self.n):
            raise ValueError(
                f"dimension mismatch: n={self.n} but u has {u.n} bits and v has {v.n}"
            )
        return u, v, c


class DistanceResponse(BaseModel):
    o: int
    t: int
    gamma: int
    pd: int


class CountRequest(PairQuery):
    oracle: bool = Field(default=False, description="also run the brute-force count")
    budget: int = Field(default=10**6, ge=1, description="path budget for the oracle")


class CountResponse(BaseModel):
    pp: str = Field(description="exact shortest-proper-path count, decimal string")
    oracle: str | None = None
    agree: bool | None = None


class EnumerateRequest(PairQuery):
    limit: int | None = Field(default=None, ge=0, description="stop after this many paths")


class PathRecord(BaseModel):
    flips: list[int]
    vertices: list[str]


class EnumerateTotal(BaseModel):
    total: int


class TableRequest(BaseModel):
    n: int = Field(ge=2)
    coloring: str

    def to_domain(self) -> Coloring:
        return parse_coloring(self.n, self.coloring)

    @model_validator(mode="after")
    def _parseable(self) -> "TableRequest":
        self.to_domain()
        return self


class TableRow(BaseModel):
    o: int
    t: int
    gamma: int
    pd: int
    pp: str


class TableResponse(BaseModel):
    n: int
    coloring: str
    rows: list[TableRow]


class VerifyRequest(BaseModel):
    max_n: int = Field(ge=2, le=20, description="sweep n = 2..max_n")
    colorings: str = Field(default="all-j", description='"all-j" or "random-jstar:K"')
    budget: int = Field(default=10**6, ge=1)
    seed: int = 0
    negative_control: bool = Field(
        default=False,
        description="use the deliberately wrong rounded-up flip budget; must fail",
    )

    @field_validator("colorings")
    @classmethod
    def _known_spec(cls, value: str) -> str:
        parse_colorings_spec(value)
        return value


class MismatchRecord(BaseModel):
    kind: str
    n: int
    coloring: str
    u: str
    v: str
    formula: str
    oracle: str


class VerifyResponse(BaseModel):
    scope: str
    checked: int
    skipped: int
    passed: bool
    mismatches: list[MismatchRecord]
    elapsed: float


class HealthResponse(BaseModel):
    service: str
    version: str
