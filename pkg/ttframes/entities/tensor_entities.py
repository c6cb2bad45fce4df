from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


Triangle = Tuple[int, int, int]


class ObjectId(BaseModel):
    """Isomorphism class of objects: a dense index plus a display label."""

    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    label: str

    @field_validator("label")
    @classmethod
    def label_not_empty(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("Object label cannot be empty")
        return value


class TensorSystem(BaseModel):
    """Finite model of a noncommutative tensor triangulated category.

    Objects are dense indices with the zero object at index 0. The sum and
    tensor tables are total n x n operations stored as nested tuples, so the
    system is hashable and compares by value. Triangles and summand pairs are
    kept sorted and free of duplicates.
    """

    model_config = ConfigDict(frozen=True)

    objects: Tuple[ObjectId, ...]
    zero: int = 0
    unit: int
    shift: Tuple[int, ...]
    sum: Tuple[Tuple[int, ...], ...]
    tensor: Tuple[Tuple[int, ...], ...]
    triangles: Tuple[Triangle, ...] = ()
    summands: Tuple[Tuple[int, int], ...] = ()

    @field_validator("triangles", "summands")
    @classmethod
    def canonical_order(cls, value):
        return tuple(sorted(set(value)))

    @model_validator(mode="after")
    def check_shapes(self) -> "TensorSystem":
        n = len(self.objects)
        if n == 0:
            raise ValueError("A tensor system needs at least the zero object")
        for position, obj in enumerate(self.objects):
            if obj.index != position:
                raise ValueError(f"Object {obj.label!r} has index {obj.index}, expected {position}")
        labels = [obj.label for obj in self.objects]
        if len(set(labels)) != n:
            raise ValueError("Object labels must be unique")
        if self.zero != 0:
            raise ValueError("The zero object must have index 0")
        if not 0 <= self.unit < n:
            raise ValueError("Unit index out of range")
        if len(self.shift) != n or any(not 0 <= s < n for s in self.shift):
            raise ValueError("Shift must map every object to an object")
        for name, table in (("sum", self.sum), ("tensor", self.tensor)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"The {name} table must be {n} x {n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"The {name} table has entries out of range")
        for triangle in self.triangles:
            if any(not 0 <= v < n for v in triangle):
                raise ValueError(f"Triangle {triangle} references an unknown object")
        for pair in self.summands:
            if any(not 0 <= v < n for v in pair):
                raise ValueError(f"Summand pair {pair} references an unknown object")
        return self

    @property
    def size(self) -> int:
        return len(self.objects)

    @property
    def labels(self) -> List[str]:
        return [obj.label for obj in self.objects]

    @property
    def is_degenerate(self) -> bool:
        return self.unit == self.zero

    def index_of(self, label: str) -> int:
        for obj in self.objects:
            if obj.label == label:
                return obj.index
        raise KeyError(label)

    def label_of(self, index: int) -> str:
        return self.objects[index].label

    def shift_preimages(self) -> List[List[int]]:
        preimages: List[List[int]] = [[] for _ in self.objects]
        for source, target in enumerate(self.shift):
            preimages[target].append(source)
        return preimages

    def sum_array(self) -> np.ndarray:
        return np.array(self.sum, dtype=np.int64).reshape(self.size, self.size)

    def tensor_array(self) -> np.ndarray:
        return np.array(self.tensor, dtype=np.int64).reshape(self.size, self.size)

    def shift_array(self) -> np.ndarray:
        return np.array(self.shift, dtype=np.int64)

    def triangle_array(self) -> np.ndarray:
        n = self.size
        holds = np.zeros((n, n, n), dtype=bool)
        for a, b, c in self.triangles:
            holds[a, b, c] = True
        return holds

    def summand_array(self) -> np.ndarray:
        n = self.size
        holds = np.zeros((n, n), dtype=bool)
        for s, t in self.summands:
            holds[s, t] = True
        return holds


class Violation(BaseModel):
    """A failed axiom instance. The witness is a tuple of element indices."""

    model_config = ConfigDict(frozen=True)

    axiom: str
    witness: Tuple[int, ...]

    def describe(self, labels: Optional[List[str]] = None) -> str:
        if labels is None:
            shown = ", ".join(str(i) for i in self.witness)
        else:
            shown = ", ".join(labels[i] for i in self.witness)
        return f"{self.axiom}({shown})"


class ValidationReport(BaseModel):
    """Outcome of an axiom check: ok exactly when no violation was found."""

    ok: bool
    violations: List[Violation] = Field(default_factory=list)

    @model_validator(mode="after")
    def ok_matches_violations(self) -> "ValidationReport":
        if self.ok == bool(self.violations):
            raise ValueError("ok must be true exactly when there are no violations")
        return self

    @classmethod
    def from_violations(cls, violations: List[Violation]) -> "ValidationReport":
        return cls(ok=not violations, violations=list(violations))

    def axioms(self) -> List[str]:
        seen: Dict[str, None] = {}
        for violation in self.violations:
            seen.setdefault(violation.axiom, None)
        return list(seen)

    def count(self, axiom: str) -> int:
        return sum(1 for v in self.violations if v.axiom == axiom)

    def first(self, axiom: str) -> Violation:
        for violation in self.violations:
            if violation.axiom == axiom:
                return violation
        raise KeyError(axiom)
