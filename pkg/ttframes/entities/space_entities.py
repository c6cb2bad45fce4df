from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class FiniteSpace(BaseModel):
    """Finite topological space; open sets are bit masks over the point indices."""

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...]
    opens: Tuple[int, ...]
    payloads: Optional[Tuple[Any, ...]] = None

    @field_validator("opens")
    @classmethod
    def canonical_opens(cls, value):
        return tuple(sorted(set(value)))

    @model_validator(mode="after")
    def check_masks(self) -> "FiniteSpace":
        if any(mask < 0 or mask >> self.size for mask in self.opens):
            raise ValueError("Open sets must be subsets of the points")
        if self.payloads is not None and len(self.payloads) != self.size:
            raise ValueError("Payloads must have one entry per point")
        return self

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def closed_sets(self) -> List[int]:
        return sorted(self.full_mask & ~mask for mask in self.opens)

    def points_of(self, mask: int) -> List[int]:
        return [i for i in range(self.size) if mask >> i & 1]

    def describe(self, mask: int) -> str:
        return "{" + ",".join(self.labels[i] for i in self.points_of(mask)) + "}"
