from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ttframes.entities.exceptions import NotALattice
from ttframes.entities.ideal_entities import Ideal


BoolMatrix = Tuple[Tuple[bool, ...], ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


class FiniteFrame(BaseModel):
    """Finite lattice with its order, meet and join tables.

    Elements are the indices ``0 .. size-1``. The frame laws themselves are
    not enforced here; ``check_frame_laws`` reports on them so that broken
    inputs such as the diamond lattice can still be represented.
    """

    model_config = ConfigDict(frozen=True)

    size: int = Field(..., ge=1)
    leq: BoolMatrix
    meet: IntMatrix
    join: IntMatrix
    bottom: int
    top: int
    labels: Tuple[str, ...]
    payload: Optional[Tuple[Ideal, ...]] = None

    @model_validator(mode="after")
    def check_shapes(self) -> "FiniteFrame":
        n = self.size
        for name, table in (("leq", self.leq), ("meet", self.meet), ("join", self.join)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"The {name} table must be {n} x {n}")
        for name, table in (("meet", self.meet), ("join", self.join)):
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"The {name} table has entries out of range")
        if not (0 <= self.bottom < n and 0 <= self.top < n):
            raise ValueError("Bottom and top must be elements")
        if len(self.labels) != n:
            raise ValueError("Every element needs a label")
        if self.payload is not None and len(self.payload) != n:
            raise ValueError("Payload must have one ideal per element")
        return self

    @classmethod
    def from_leq(
        cls,
        leq: Sequence[Sequence[bool]],
        labels: Optional[Sequence[str]] = None,
        payload: Optional[Sequence[Ideal]] = None,
    ) -> "FiniteFrame":
        """Build meets and joins from a partial order, raising NotALattice if one is missing."""
        order = np.array(leq, dtype=bool)
        n = order.shape[0]
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                lower = np.flatnonzero(order[:, a] & order[:, b])
                greatest = [c for c in lower if order[lower, c].all()]
                if len(greatest) != 1:
                    raise NotALattice(f"elements {a} and {b} have no meet", (a, b))
                upper = np.flatnonzero(order[a, :] & order[b, :])
                least = [c for c in upper if order[c, upper].all()]
                if len(least) != 1:
                    raise NotALattice(f"elements {a} and {b} have no join", (a, b))
                meet[a][b] = int(greatest[0])
                join[a][b] = int(least[0])
        bottoms = np.flatnonzero(order.all(axis=1))
        tops = np.flatnonzero(order.all(axis=0))
        if len(bottoms) != 1 or len(tops) != 1:
            raise NotALattice("order has no unique bottom and top")
        return cls(
            size=n,
            leq=tuple(tuple(bool(v) for v in row) for row in order),
            meet=tuple(tuple(row) for row in meet),
            join=tuple(tuple(row) for row in join),
            bottom=int(bottoms[0]),
            top=int(tops[0]),
            labels=tuple(labels) if labels is not None else tuple(str(i) for i in range(n)),
            payload=tuple(payload) if payload is not None else None,
        )

    @property
    def elements(self) -> List[int]:
        return list(range(self.size))

    def leq_array(self) -> np.ndarray:
        return np.array(self.leq, dtype=bool).reshape(self.size, self.size)

    def meet_array(self) -> np.ndarray:
        return np.array(self.meet, dtype=np.int64).reshape(self.size, self.size)

    def join_array(self) -> np.ndarray:
        return np.array(self.join, dtype=np.int64).reshape(self.size, self.size)

    def element_of(self, ideal: Ideal) -> int:
        """Element whose payload is the given ideal."""
        if self.payload is None:
            raise KeyError("frame carries no ideal payload")
        for index, candidate in enumerate(self.payload):
            if candidate.mask == ideal.mask:
                return index
        raise KeyError(ideal.mask)


class Point(BaseModel):
    """Frame map into the two-element frame, kept with its prime element."""

    model_config = ConfigDict(frozen=True)

    assignment: Tuple[int, ...]
    prime_element: int
    prime_ideal: Tuple[int, ...]

    @model_validator(mode="after")
    def check_assignment(self) -> "Point":
        if any(v not in (0, 1) for v in self.assignment):
            raise ValueError("A point assigns 0 or 1 to every element")
        if self.assignment[self.prime_element] != 0:
            raise ValueError("The prime element is sent to 0")
        return self


class FrameMap(BaseModel):
    """Table of a map between two finite frames."""

    model_config = ConfigDict(frozen=True)

    source: FiniteFrame
    target: FiniteFrame
    table: Tuple[int, ...]

    @model_validator(mode="after")
    def check_table(self) -> "FrameMap":
        if len(self.table) != self.source.size:
            raise ValueError("The table needs one image per source element")
        if any(not 0 <= v < self.target.size for v in self.table):
            raise ValueError("Images must be target elements")
        return self

    def __call__(self, element: int) -> int:
        return self.table[element]
