"""Request bodies for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class CheckRequest(BaseModel):
    document: str


class SaturateRequest(BaseModel):
    document: str
    spec: str | None = None
    logic: str = "eq"
    budget: int = Field(default=10000, ge=1)
    depth: int = Field(default=4, ge=1)


class ProveRequest(BaseModel):
    document: str
    spec: str | None = None
    logic: str = "eq"


class EntailRequest(BaseModel):
    document: str
    morphism: str | None = None
    logic: str = "eq"
    budget: int = Field(default=10000, ge=1)
    depth: int = Field(default=4, ge=1)


class TranslateRequest(BaseModel):
    document: str
    spec: str | None = None
    via: str = "far"


class EvalRequest(BaseModel):
    program: str
    state: dict[str, int] = Field(default_factory=dict)
    order: str = "left"
    modulus: int = Field(default=2 ** 16, ge=2)
