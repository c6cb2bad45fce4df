from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np


class OrderService:
    """Helpers on finite preorders given as boolean matrices ``leq[a, b]``."""

    @staticmethod
    def covers(leq: np.ndarray) -> np.ndarray:
        """Cover relation of a partial order: a < b with nothing strictly between."""
        order = np.asarray(leq, dtype=bool)
        strict = order & ~np.eye(order.shape[0], dtype=bool)
        through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        return strict & ~through

    @staticmethod
    def transitive_closure(relation: np.ndarray) -> np.ndarray:
        closure = np.asarray(relation, dtype=bool) | np.eye(len(relation), dtype=bool)
        for k in range(len(closure)):
            closure = closure | (closure[:, [k]] & closure[[k], :])
        return closure

    @staticmethod
    def iter_isomorphisms(
        leq_a: np.ndarray,
        leq_b: np.ndarray,
        colors_a: Optional[Sequence] = None,
        colors_b: Optional[Sequence] = None,
        fixed: Optional[Dict[int, int]] = None,
    ) -> Iterator[Tuple[int, ...]]:
        """Yield every bijection f with leq_a[x, y] == leq_b[f(x), f(y)].

        Colors are invariants that matched elements must share; ``fixed``
        pre-seeds part of the mapping.
        """
        a = np.asarray(leq_a, dtype=bool)
        b = np.asarray(leq_b, dtype=bool)
        n = a.shape[0]
        if b.shape[0] != n:
            return

        def signature(order: np.ndarray, colors: Optional[Sequence], x: int):
            extra = colors[x] if colors is not None else None
            return (int(order[x].sum()), int(order[:, x].sum()), extra)

        sig_a = [signature(a, colors_a, x) for x in range(n)]
        sig_b = [signature(b, colors_b, y) for y in range(n)]
        if sorted(sig_a, key=repr) != sorted(sig_b, key=repr):
            return

        candidates: List[List[int]] = [
            [y for y in range(n) if sig_b[y] == sig_a[x]] for x in range(n)
        ]
        fixed = fixed or {}
        for x, y in fixed.items():
            if y not in candidates[x]:
                return
            candidates[x] = [y]

        order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
        mapping: Dict[int, int] = {}
        used = set()

        def consistent(x: int, y: int) -> bool:
            for other, image in mapping.items():
                if a[x, other] != b[y, image] or a[other, x] != b[image, y]:
                    return False
            return bool(a[x, x] == b[y, y])

        def extend(depth: int) -> Iterator[Tuple[int, ...]]:
            if depth == n:
                yield tuple(mapping[x] for x in range(n))
                return
            x = order[depth]
            for y in candidates[x]:
                if y in used or not consistent(x, y):
                    continue
                mapping[x] = y
                used.add(y)
                yield from extend(depth + 1)
                del mapping[x]
                used.discard(y)

        yield from extend(0)

    @staticmethod
    def find_isomorphism(
        leq_a: np.ndarray,
        leq_b: np.ndarray,
        colors_a: Optional[Sequence] = None,
        colors_b: Optional[Sequence] = None,
        fixed: Optional[Dict[int, int]] = None,
    ) -> Optional[Tuple[int, ...]]:
        return next(OrderService.iter_isomorphisms(leq_a, leq_b, colors_a, colors_b, fixed), None)
