from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Ideal(BaseModel):
    """Set of object indices stored as a bit mask over a universe of n objects."""

    model_config = ConfigDict(frozen=True)

    mask: int = Field(..., ge=0)
    universe: int = Field(..., ge=1)

    @model_validator(mode="after")
    def check_mask(self) -> "Ideal":
        if self.mask >> self.universe:
            raise ValueError("Ideal mask has bits outside its universe")
        if not self.mask & 1:
            raise ValueError("An ideal always contains the zero object")
        return self

    @classmethod
    def from_members(cls, members: Iterable[int], universe: int) -> "Ideal":
        mask = 1
        for member in members:
            mask |= 1 << member
        return cls(mask=mask, universe=universe)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.universe) if self.mask >> i & 1)

    @property
    def is_whole(self) -> bool:
        return self.mask == (1 << self.universe) - 1

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def issubset(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def labels(self, names: List[str]) -> List[str]:
        return [names[i] for i in self.members]

    def describe(self, names: List[str]) -> str:
        return "{" + ",".join(self.labels(names)) + "}"


class PrimeClassification(BaseModel):
    """Primality verdict for one thick ideal, with a counterexample when it fails."""

    model_config = ConfigDict(frozen=True)

    is_proper: bool
    is_prime: bool
    is_completely_prime: bool
    prime_witness: Optional[Tuple[Ideal, Ideal]] = None
    complete_witness: Optional[Tuple[int, int]] = None

    @model_validator(mode="after")
    def completely_prime_implies_prime(self) -> "PrimeClassification":
        if self.is_completely_prime and not self.is_prime:
            raise ValueError("A completely prime ideal is prime")
        if (self.is_prime or self.is_completely_prime) and not self.is_proper:
            raise ValueError("Prime ideals are proper")
        return self

    @property
    def witness(self):
        """The first counterexample: an ideal pair for primality, else an object pair."""
        if self.prime_witness is not None:
            return self.prime_witness
        return self.complete_witness
