from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ttframes.entities.frame_entities import FiniteFrame
from ttframes.entities.space_entities import FiniteSpace


class FrameSupport(BaseModel):
    """Assignment of a frame element d(k) to each object k."""

    model_config = ConfigDict(frozen=True)

    frame: FiniteFrame
    d: Tuple[int, ...]

    @model_validator(mode="after")
    def check_values(self) -> "FrameSupport":
        if any(not 0 <= v < self.frame.size for v in self.d):
            raise ValueError("Support values must be frame elements")
        return self


class TopSupport(BaseModel):
    """Assignment of a subset sigma(a) of a space to each object a."""

    model_config = ConfigDict(frozen=True)

    space: FiniteSpace
    sigma: Tuple[int, ...]

    @model_validator(mode="after")
    def check_values(self) -> "TopSupport":
        if any(mask < 0 or mask >> self.space.size for mask in self.sigma):
            raise ValueError("Support values must be subsets of the space")
        return self


class FinalMap(BaseModel):
    """Comparison map from a support's space into the prime spectrum."""

    model_config = ConfigDict(frozen=True)

    source: FiniteSpace
    target: FiniteSpace
    table: Tuple[int, ...]
    continuous: bool
    pullback_holds: bool
