from typing import Dict, List, Mapping, Tuple

import numpy as np

from ttframes.entities.tensor_entities import ValidationReport, Violation


AxiomTables = Dict[str, np.ndarray]


class AxiomService:
    """Turns boolean truth tables of named axioms into reports.

    Each axiom is evaluated once over all index tuples of its arity, giving
    an array that is True where the axiom holds. Violations are the False
    positions in C order, so witnesses come out lexicographically sorted.
    """

    @staticmethod
    def violations(name: str, holds: np.ndarray) -> List[Violation]:
        holds = np.asarray(holds, dtype=bool)
        return [
            Violation(axiom=name, witness=tuple(int(i) for i in position))
            for position in np.argwhere(~holds)
        ]

    @staticmethod
    def report(tables: Mapping[str, np.ndarray]) -> ValidationReport:
        found: List[Violation] = []
        for name, holds in tables.items():
            found.extend(AxiomService.violations(name, holds))
        return ValidationReport.from_violations(found)

    @staticmethod
    def holds_at(tables: Mapping[str, np.ndarray], name: str, witness: Tuple[int, ...]) -> bool:
        if name not in tables:
            raise KeyError(f"unknown axiom {name!r}")
        holds = np.asarray(tables[name], dtype=bool)
        if len(witness) != holds.ndim:
            raise ValueError(f"axiom {name!r} takes {holds.ndim} indices, got {len(witness)}")
        return bool(holds[tuple(witness)])

    @staticmethod
    def grids(size: int) -> Tuple[Tuple[np.ndarray, np.ndarray], Tuple[np.ndarray, np.ndarray, np.ndarray]]:
        """Open index meshes for pairs and triples over ``range(size)``."""
        pair = np.ix_(np.arange(size), np.arange(size))
        triple = np.ix_(np.arange(size), np.arange(size), np.arange(size))
        return pair, triple
