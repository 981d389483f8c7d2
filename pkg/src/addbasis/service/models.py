"""Wire-format models for the HTTP service.

Pydantic stays at this boundary: the core package works with plain frozen
dataclasses, and these models only validate/serialize requests and
responses. A set can arrive either as the compact text form
(``"E={1,5}; m=6; R={0}; N0=0"``, including the aliases ``naturals``,
``evens``, ``odds``) or as the explicit JSON object.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..intset import PeriodicSet, canonicalize, parse_set


class PeriodicSetModel(BaseModel):
    exceptional: list[int] = Field(default_factory=list)
    modulus: int = 1
    residues: list[int] = Field(default_factory=list)
    threshold: int = 0

    @classmethod
    def from_core(cls, s: PeriodicSet) -> "PeriodicSetModel":
        return cls(exceptional=list(s.exceptional), modulus=s.modulus,
                   residues=list(s.residues), threshold=s.threshold)

    def to_core(self) -> PeriodicSet:
        return canonicalize(self.exceptional, self.modulus,
                            self.residues, self.threshold)


SetInput = str | PeriodicSetModel


def as_core(value: SetInput) -> PeriodicSet:
    if isinstance(value, str):
        return parse_set(value)
    return value.to_core()


class SetRequest(BaseModel):
    set: SetInput


class VerifyRequest(BaseModel):
    set: SetInput
    p: SetInput


class SumsetWindowRequest(BaseModel):
    set: SetInput
    h: int = Field(ge=1)
    lo: int
    hi: int


class EmpiricalOrderRequest(BaseModel):
    set: SetInput
    h_max: int = Field(ge=1)
    lo: int
    hi: int


class BruteSubsetsRequest(BaseModel):
    set: SetInput
    pool: list[int] | None = None


class RemoveRequest(BaseModel):
    set: SetInput
    remove: list[int]


class CensusRequest(BaseModel):
    trials: int = 100
    seed: int = 0
    m_max: int = 60
    e_max: int = 6
    density: float = 0.5
    window_lo: int = 0
    window_hi: int = 120


class ParsedSetResponse(BaseModel):
    set: PeriodicSetModel
    text: str
    is_finite: bool
    min_element: int | None
