"""Pydantic request/response models for the catalog service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class GroupSummary(BaseModel):
    label: str
    name: str
    absolute_type: str
    identity_component: str
    components: int
    realizable: bool
    maximal: bool


class GroupDetail(GroupSummary):
    provenance: str
    fingerprint: FingerprintModel
    subgroups: list[str] = Field(default_factory=list)


class FingerprintModel(BaseModel):
    order: int
    element_orders: list[int]
    class_sizes: list[int]
    abelian_invariants: list[int]
    center_order: int
    derived_order: int


class MomentEntry(BaseModel):
    e1: int
    e2: int
    e3: int
    value: str          # exact rational "num/den"
    approx: float


class MomentsResponse(BaseModel):
    label: str
    simplex: int
    moments: list[MomentEntry]


class DiagonalEntry(BaseModel):
    l1: int
    l2: int
    l3: int
    value: str
    approx: float


class DiagonalResponse(BaseModel):
    label: str
    m: int
    norms: list[DiagonalEntry]


class DensitiesResponse(BaseModel):
    label: str
    rows: list[list[str]]       # 4x7 exact rationals
    approx: list[list[float]]


class CheckModel(BaseModel):
    name: str
    expected: str
    got: str
    ok: bool


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[CheckModel]


class RootsResponse(BaseModel):
    mode: str
    triples: list[str]
    ok: bool = True


class MatchRequest(BaseModel):
    records: list[str] = Field(
        description="L-polynomial records, one 'p c1 c2 c3' per entry")
    variant: str = "b"
    tol: float


class MatchCandidate(BaseModel):
    label: str
    name: str
    max_deviation: float


class MatchResponse(BaseModel):
    variant: str
    tol: float
    heuristic: bool = True
    candidates: list[MatchCandidate]


class SampleRequest(BaseModel):
    group: str
    n: int = Field(gt=0, le=1_000_000)
    seed: int = 0


class SampleResponse(BaseModel):
    group: str
    seed: int
    triples: list[tuple[float, float, float]]


GroupDetail.model_rebuild()
