"""
Automorphism File Model
=======================

File form of an automorphism: generator images in word text syntax,
forward and backward.
"""

from pydantic import BaseModel, Field, model_validator


class AutomorphismFile(BaseModel):
    """{"rank": n, "forward": ["a1 a2", ...], "backward": [...]}"""
    rank: int = Field(ge=1)
    forward: list[str]
    backward: list[str]
    name: str = ""

    @model_validator(mode="after")
    def check_lengths(self) -> "AutomorphismFile":
        if len(self.forward) != self.rank or len(self.backward) != self.rank:
            raise ValueError(f"forward and backward need {self.rank} images each")
        return self
