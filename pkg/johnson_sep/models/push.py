"""
Push Data Models
================

Homology-level data of point and curve pushing maps, and the lift
criterion input.
"""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from ..errors import PushDataError


class PushKind(str, Enum):
    """Kind of pushing map."""
    POINT = "point"
    CURVE = "curve"


class PushDatum(BaseModel):
    """
    One pushing datum: c is the pushing-curve class, d the pushed loop or
    curve class, i_gamma the signed self-intersection total (curves only).
    """
    kind: PushKind
    c: list[int]
    d: list[int]
    i_gamma: int = 0

    @model_validator(mode="after")
    def check_shape(self) -> "PushDatum":
        if len(self.c) != len(self.d):
            raise PushDataError(f"c has {len(self.c)} entries but d has {len(self.d)}")
        if self.kind == PushKind.POINT and self.i_gamma != 0:
            raise PushDataError("point pushes carry i_gamma = 0")
        return self


class HomologyModelFile(BaseModel):
    """File form of a homology model: a skew-symmetric pairing matrix."""
    pairing: list[list[int]]
    genus: int | None = None
    label: str = ""


class LiftCriterionInput(BaseModel):
    """Order s of the deck element of delta and the lift offset j."""
    s: int = Field(ge=1)
    j: int = Field(ge=0)

    @model_validator(mode="after")
    def check_offset(self) -> "LiftCriterionInput":
        if self.j >= self.s:
            raise ValueError(f"offset j={self.j} must be below s={self.s}")
        return self
