"""Finite frames, their points and the Zariski frame of radical ideals."""

from functools import lru_cache, reduce
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ttframes.entities.exceptions import AssumptionViolated
from ttframes.entities.frame_entities import FiniteFrame, FrameMap, Point
from ttframes.entities.ideal_entities import Ideal
from ttframes.entities.tensor_entities import TensorSystem, ValidationReport
from ttframes.frameworks.logging_config import get_logger
from ttframes.usecases.ideals import (
    DEFAULT_ENUMERATION_BOUND,
    check_assumption,
    close_mask,
    enumerate_thick_ideals,
    ideal_label,
    is_radical,
    radical,
)
from ttframes.usecases.services.axiom_services import AxiomService, AxiomTables
from ttframes.usecases.services.bitset_services import BitsetService
from ttframes.usecases.services.order_services import OrderService


logger = get_logger(__name__)


def frame_law_tables(frame: FiniteFrame) -> AxiomTables:
    n = frame.size
    L = frame.leq_array()
    M = frame.meet_array()
    J = frame.join_array()
    idx = np.arange(n)
    (a2, b2), (a, b, c) = AxiomService.grids(n)

    tables: AxiomTables = {}
    tables["leq-reflexive"] = L[idx, idx]
    tables["leq-antisymmetric"] = ~(L & L.T) | (a2 == b2)
    tables["leq-transitive"] = ~(L[a, b] & L[b, c]) | L[a, c]
    tables["meet-lower-bound"] = L[M, a2] & L[M, b2]
    tables["meet-greatest"] = ~(L[c, a] & L[c, b]) | L[c, M[a, b]]
    tables["join-upper-bound"] = L[a2, J] & L[b2, J]
    tables["join-least"] = ~(L[a, c] & L[b, c]) | L[J[a, b], c]
    tables["bottom-least"] = L[frame.bottom, idx]
    tables["top-greatest"] = L[idx, frame.top]
    tables["distributivity"] = M[a, J[b, c]] == J[M[a, b], M[a, c]]
    return tables


def check_frame_laws(frame: FiniteFrame) -> ValidationReport:
    """Lattice laws, bounds and distributivity over all element tuples."""
    return AxiomService.report(frame_law_tables(frame))


def subset_frame(masks: Sequence[int], labels: Optional[Sequence[str]] = None, payload=None) -> FiniteFrame:
    """Frame of a family of sets ordered by inclusion."""
    masks = list(masks)
    leq = [[BitsetService.is_subset(x, y) for y in masks] for x in masks]
    if labels is None:
        labels = ["{" + ",".join(str(i) for i in BitsetService.members(m)) + "}" for m in masks]
    return FiniteFrame.from_leq(leq, labels=labels, payload=payload)


def chain_frame(length: int) -> FiniteFrame:
    """Chain 0 < 1 < ... < length-1."""
    if length < 1:
        raise ValueError("a chain has at least one element")
    leq = [[i <= j for j in range(length)] for i in range(length)]
    return FiniteFrame.from_leq(leq, labels=[str(i) for i in range(length)])


def boolean_frame(atoms: int) -> FiniteFrame:
    return powerset_frame(atoms)


def powerset_frame(points: int) -> FiniteFrame:
    return subset_frame(range(1 << points))


def diamond_lattice() -> FiniteFrame:
    """The five-element lattice M3: a lattice but not distributive."""
    leq = [
        [True, True, True, True, True],
        [False, True, False, False, True],
        [False, False, True, False, True],
        [False, False, False, True, True],
        [False, False, False, False, True],
    ]
    return FiniteFrame.from_leq(leq, labels=["0", "a", "b", "c", "1"])


def relabel_frame(frame: FiniteFrame, permutation: Sequence[int]) -> FiniteFrame:
    """Isomorphic copy where element e becomes permutation[e]."""
    n = frame.size
    inverse = [0] * n
    for old, new in enumerate(permutation):
        inverse[new] = old
    leq = [[frame.leq[inverse[i]][inverse[j]] for j in range(n)] for i in range(n)]
    labels = [frame.labels[inverse[i]] for i in range(n)]
    payload = None
    if frame.payload is not None:
        payload = [frame.payload[inverse[i]] for i in range(n)]
    return FiniteFrame.from_leq(leq, labels=labels, payload=payload)


@lru_cache(maxsize=64)
def zar_frame(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> FiniteFrame:
    """Frame of radical thick tensor ideals, ordered by inclusion.

    Meets are intersections and joins are radicals of generated unions.
    Refused when some prime is not completely prime.
    """
    holds, counterexamples = check_assumption(system)
    if not holds:
        logger.warning(
            "Zariski frame refused: "
            + ", ".join(ideal_label(system, p) for p in counterexamples)
            + " not completely prime"
        )
        raise AssumptionViolated(counterexamples)

    radicals = [i for i in enumerate_thick_ideals(system, bound=bound) if is_radical(system, i)]
    frame = subset_frame(
        [i.mask for i in radicals],
        labels=[ideal_label(system, i) for i in radicals],
        payload=radicals,
    )
    return frame


def radical_join(system: TensorSystem, left: Ideal, right: Ideal) -> Ideal:
    generated = Ideal(mask=close_mask(system, left.mask | right.mask), universe=system.size)
    return radical(system, generated)


def points(frame: FiniteFrame) -> List[Point]:
    """Points from prime elements: u is prime when u is not the top and
    a meet below u always has a factor below u."""
    return list(_points(frame))


@lru_cache(maxsize=256)
def _points(frame: FiniteFrame) -> Tuple[Point, ...]:
    L = frame.leq_array()
    M = frame.meet_array()
    found = []
    for u in range(frame.size):
        if u == frame.top:
            continue
        below = L[:, u]
        meets_below = below[M]
        if np.any(meets_below & ~below[:, None] & ~below[None, :]):
            continue
        assignment = tuple(0 if below[f] else 1 for f in range(frame.size))
        found.append(
            Point(
                assignment=assignment,
                prime_element=u,
                prime_ideal=tuple(int(f) for f in np.flatnonzero(below)),
            )
        )
    return tuple(found)


def point_from_prime_element(frame: FiniteFrame, element: int) -> Point:
    for point in points(frame):
        if point.prime_element == element:
            return point
    raise KeyError(f"element {element} is not prime")


def principal_witnesses(system: TensorSystem, frame: FiniteFrame) -> Dict[int, int]:
    """Object whose radical is each element: the sum of all its members."""
    witnesses = {}
    for element, ideal in enumerate(frame.payload):
        witnesses[element] = reduce(lambda x, y: system.sum[x][y], ideal.members, system.zero)
    return witnesses


def frame_map_tables(source: FiniteFrame, target: FiniteFrame, table: Sequence[int]) -> AxiomTables:
    f = np.asarray(table, dtype=np.int64)
    M, J = source.meet_array(), source.join_array()
    TM, TJ = target.meet_array(), target.join_array()
    (a2, b2), _ = AxiomService.grids(source.size)
    return {
        "map-bottom": np.array([f[source.bottom] == target.bottom]),
        "map-top": np.array([f[source.top] == target.top]),
        "map-meet": f[M] == TM[f[a2], f[b2]],
        "map-join": f[J] == TJ[f[a2], f[b2]],
    }


def check_frame_map(source: FiniteFrame, target: FiniteFrame, table: Sequence[int]) -> ValidationReport:
    return AxiomService.report(frame_map_tables(source, target, table))


def is_frame_map(source: FiniteFrame, target: FiniteFrame, table: Sequence[int]) -> bool:
    return check_frame_map(source, target, table).ok


def point_as_frame_map(frame: FiniteFrame, point: Point) -> FrameMap:
    return FrameMap(source=frame, target=chain_frame(2), table=point.assignment)


def compose_frame_maps(first: FrameMap, second: FrameMap) -> FrameMap:
    """second after first."""
    if first.target != second.source:
        raise ValueError("frame maps are not composable")
    return FrameMap(
        source=first.source,
        target=second.target,
        table=tuple(second.table[v] for v in first.table),
    )


def identity_frame_map(frame: FiniteFrame) -> FrameMap:
    return FrameMap(source=frame, target=frame, table=tuple(frame.elements))


def frame_isomorphisms(left: FiniteFrame, right: FiniteFrame):
    """Order isomorphisms between two frames, as element tables."""
    return OrderService.iter_isomorphisms(left.leq_array(), right.leq_array())


def all_frame_maps(source: FiniteFrame, target: FiniteFrame, candidates: Optional[Sequence[Sequence[int]]] = None):
    """Every frame map whose table picks entries from the per-element candidates."""
    if candidates is None:
        candidates = [target.elements] * source.size
    for table in product(*candidates):
        if is_frame_map(source, target, table):
            yield tuple(table)
