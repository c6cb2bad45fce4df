"""Finite spaces: the prime spectrum, spaces of frames, Hochster duals and
the homeomorphism checks tying them together."""

from functools import reduce
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ttframes.entities.exceptions import BoundExceeded
from ttframes.entities.frame_entities import FiniteFrame
from ttframes.entities.space_entities import FiniteSpace
from ttframes.entities.tensor_entities import TensorSystem
from ttframes.frameworks.logging_config import get_logger
from ttframes.usecases.dtos import TheoremReport
from ttframes.usecases.frames import points, principal_witnesses, zar_frame
from ttframes.usecases.ideals import (
    DEFAULT_ENUMERATION_BOUND,
    classify,
    ideal_label,
    primes,
    sqrt_object,
)
from ttframes.usecases.services.bitset_services import BitsetService
from ttframes.usecases.services.order_services import OrderService


logger = get_logger(__name__)

DEFAULT_SEARCH_BOUND = 12


def generate_topology(size: int, subbasis: Iterable[int]) -> Tuple[int, ...]:
    """Close a family of subsets, plus the empty and full sets, under
    pairwise union and intersection."""
    family = {0, BitsetService.full(size), *subbasis}
    changed = True
    while changed:
        changed = False
        for x, y in combinations(sorted(family), 2):
            for z in (x | y, x & y):
                if z not in family:
                    family.add(z)
                    changed = True
    return tuple(sorted(family))


def V_of(system: TensorSystem, subset: Iterable[int]) -> int:
    """Mask of the primes meeting none of the given objects."""
    selected = BitsetService.from_members(subset)
    mask = 0
    for position, prime in enumerate(primes(system)):
        if prime.mask & selected == 0:
            mask |= 1 << position
    return mask


def spc(system: TensorSystem) -> FiniteSpace:
    """Prime spectrum; closed sets are generated by V({a}) for every object."""
    prime_list = primes(system)
    size = len(prime_list)
    closed = generate_topology(size, (V_of(system, [a]) for a in range(system.size)))
    full = BitsetService.full(size)
    return FiniteSpace(
        labels=tuple(ideal_label(system, p) for p in prime_list),
        opens=tuple(full & ~mask for mask in closed),
        payloads=tuple(prime_list),
    )


def open_of_element(frame: FiniteFrame, element: int) -> int:
    """U_f: the points sending f to 1."""
    mask = 0
    for position, point in enumerate(points(frame)):
        if point.assignment[element]:
            mask |= 1 << position
    return mask


def space_of_frame(frame: FiniteFrame) -> FiniteSpace:
    point_list = points(frame)
    return FiniteSpace(
        labels=tuple(frame.labels[p.prime_element] for p in point_list),
        opens=tuple(open_of_element(frame, f) for f in frame.elements),
        payloads=tuple(point_list),
    )


def closed_sets(space: FiniteSpace) -> List[int]:
    return space.closed_sets()


def hochster_dual(space: FiniteSpace) -> FiniteSpace:
    """On a finite space every subset is quasi-compact, so the dual opens
    are exactly the closed sets."""
    return FiniteSpace(labels=space.labels, opens=tuple(space.closed_sets()), payloads=space.payloads)


def _membership(space: FiniteSpace) -> np.ndarray:
    return np.array(
        [[bool(mask >> x & 1) for x in range(space.size)] for mask in space.opens],
        dtype=bool,
    ).reshape(len(space.opens), space.size)


def specialization(space: FiniteSpace) -> np.ndarray:
    """leq[x, y]: every open containing x contains y."""
    member = _membership(space)
    return ~(member[:, :, None] & ~member[:, None, :]).any(axis=0)


def is_topology(space: FiniteSpace) -> bool:
    family = set(space.opens)
    if 0 not in family or space.full_mask not in family:
        return False
    return all(x | y in family and x & y in family for x, y in combinations(space.opens, 2))


def is_t0(space: FiniteSpace) -> bool:
    leq = specialization(space)
    return not np.any(leq & leq.T & ~np.eye(space.size, dtype=bool))


def is_spectral(space: FiniteSpace) -> bool:
    """A finite space is spectral exactly when it is a T0 topology."""
    return is_topology(space) and is_t0(space)


def subspace(space: FiniteSpace, indices: Sequence[int]) -> FiniteSpace:
    """Subspace topology on the given points, renumbered in the given order."""
    indices = list(indices)

    def restrict(mask: int) -> int:
        return BitsetService.from_members(
            position for position, x in enumerate(indices) if mask >> x & 1
        )

    payloads = None
    if space.payloads is not None:
        payloads = tuple(space.payloads[x] for x in indices)
    return FiniteSpace(
        labels=tuple(space.labels[x] for x in indices),
        opens=tuple(restrict(mask) for mask in space.opens),
        payloads=payloads,
    )


def maps_opens(source: FiniteSpace, target: FiniteSpace, mapping: Sequence[int]) -> bool:
    """Whether a point bijection carries the opens of source exactly onto those of target."""
    if len(mapping) != source.size or source.size != target.size:
        return False
    if sorted(mapping) != list(range(target.size)):
        return False
    images = {BitsetService.image(mask, mapping) for mask in source.opens}
    return images == set(target.opens)


def homeomorphic(
    source: FiniteSpace,
    target: FiniteSpace,
    bound: int = DEFAULT_SEARCH_BOUND,
    colors_source: Optional[Sequence] = None,
    colors_target: Optional[Sequence] = None,
) -> Optional[Tuple[int, ...]]:
    """A point bijection carrying opens onto opens, or None.

    Candidates are order isomorphisms of the specialization preorders, pruned
    by degree sequences and optional colors; each is confirmed on the opens.
    """
    if source.size > bound or target.size > bound:
        raise BoundExceeded("space", max(source.size, target.size), bound)
    if source.size != target.size or len(source.opens) != len(target.opens):
        return None
    count_a = [sum(1 for m in source.opens if m >> x & 1) for x in range(source.size)]
    count_b = [sum(1 for m in target.opens if m >> y & 1) for y in range(target.size)]
    colors_a = [(count_a[x], colors_source[x] if colors_source else None) for x in range(source.size)]
    colors_b = [(count_b[y], colors_target[y] if colors_target else None) for y in range(target.size)]
    for mapping in OrderService.iter_isomorphisms(
        specialization(source), specialization(target), colors_a, colors_b
    ):
        if maps_opens(source, target, mapping):
            return mapping
    return None


def corres_bijection(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> Dict[int, Optional[int]]:
    """Point index of the Zariski frame to prime index, via x -> I_x."""
    frame = zar_frame(system, bound)
    prime_index = {p.mask: j for j, p in enumerate(primes(system))}
    return {
        i: prime_index.get(frame.payload[point.prime_element].mask)
        for i, point in enumerate(points(frame))
    }


def verify_corres(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> TheoremReport:
    """Points of the Zariski frame against prime thick ideals."""
    frame = zar_frame(system, bound)
    point_list = points(frame)
    prime_list = primes(system)
    report = TheoremReport("corres")

    for i, point in enumerate(point_list):
        joined = reduce(lambda x, y: frame.join[x][y], point.prime_ideal, frame.bottom)
        report.add(f"point {i}: prime element is the join of its zero set", joined == point.prime_element)
        ideal = frame.payload[point.prime_element]
        report.add(f"point {i}: I_x = {ideal_label(system, ideal)} is prime", classify(system, ideal).is_prime)

    bijection = corres_bijection(system, bound)
    images = [j for j in bijection.values() if j is not None]
    report.add("every I_x is a prime ideal", len(images) == len(point_list))
    report.add("x -> I_x is injective", len(set(images)) == len(images))
    report.add("x -> I_x is surjective", set(images) == set(range(len(prime_list))))

    by_assignment = {point.assignment: i for i, point in enumerate(point_list)}
    for j, prime in enumerate(prime_list):
        assignment = tuple(0 if ideal.issubset(prime) else 1 for ideal in frame.payload)
        back = by_assignment.get(assignment)
        report.add(
            f"prime {ideal_label(system, prime)}: y_P is a point mapping back",
            back is not None and bijection.get(back) == j,
        )

    for k in range(system.size):
        element = frame.element_of(sqrt_object(system, k))
        opened = open_of_element(frame, element)
        image = {bijection[i] for i in BitsetService.members(opened)}
        expected = {j for j, p in enumerate(prime_list) if k not in p}
        report.add(f"object {system.label_of(k)}: U_sqrt(k) matches primes avoiding k", image == expected)

    report.data["bijection"] = [bijection[i] for i in range(len(point_list))]
    return report


def verify_hdual(
    system: TensorSystem,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> TheoremReport:
    """The dual of the Zariski frame's space is the prime spectrum."""
    frame = zar_frame(system, bound)
    space = space_of_frame(frame)
    dual = hochster_dual(space)
    spectrum = spc(system)
    bijection = corres_bijection(system, bound)
    mapping = [bijection[i] for i in range(space.size)]
    report = TheoremReport("hdual")
    report.add("dual is an involution on the frame's space", hochster_dual(dual) == space)
    report.add("dual is an involution on the spectrum", hochster_dual(hochster_dual(spectrum)) == spectrum)
    report.add(
        "corres bijection carries dual opens onto spectrum opens",
        None not in mapping and maps_opens(dual, spectrum, mapping),
    )
    if max(dual.size, spectrum.size) <= search_bound:
        report.add("homeomorphism search agrees", homeomorphic(dual, spectrum, search_bound) is not None)
    else:
        report.add("homeomorphism search agrees", True, detail="skipped above search bound")
    return report


def zar_subbasis_space(system: TensorSystem, frame: FiniteFrame) -> FiniteSpace:
    """Radical ideals with the topology generated by {I : k not in I}."""
    subbasis = [
        BitsetService.from_members(e for e, ideal in enumerate(frame.payload) if k not in ideal)
        for k in range(system.size)
    ]
    return FiniteSpace(
        labels=frame.labels,
        opens=generate_topology(frame.size, subbasis),
        payloads=frame.payload,
    )


def dual_open_space(spectrum: FiniteSpace) -> FiniteSpace:
    """Opens of the dual spectrum with the topology generated by {V : V not above U}."""
    dual_opens = list(hochster_dual(spectrum).opens)
    subbasis = [
        BitsetService.from_members(
            position for position, v in enumerate(dual_opens) if not BitsetService.is_subset(u, v)
        )
        for u in dual_opens
    ]
    return FiniteSpace(
        labels=tuple(spectrum.describe(v) for v in dual_opens),
        opens=generate_topology(len(dual_opens), subbasis),
        payloads=tuple(dual_opens),
    )


def verify_noncomTN(
    system: TensorSystem,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> TheoremReport:
    """Both spaces built from radical ideals and from dual opens are spectral and homeomorphic."""
    frame = zar_frame(system, bound)
    spectrum = spc(system)
    first = zar_subbasis_space(system, frame)
    second = dual_open_space(spectrum)
    report = TheoremReport("noncomTN")
    report.add("radical-ideal space is spectral", is_spectral(first))
    report.add("dual-open space is spectral", is_spectral(second))

    position = {mask: i for i, mask in enumerate(second.payloads)}
    prime_list = primes(system)
    mapping = []
    for ideal in frame.payload:
        avoided = BitsetService.from_members(
            j for j, p in enumerate(prime_list) if not ideal.issubset(p)
        )
        mapping.append(position.get(avoided))
    report.add("I -> {P : I not in P} lands in dual opens", None not in mapping)
    report.add(
        "I -> {P : I not in P} is a homeomorphism",
        None not in mapping and maps_opens(first, second, mapping),
    )
    if max(first.size, second.size) <= search_bound:
        report.add("homeomorphism search agrees", homeomorphic(first, second, search_bound) is not None)
    else:
        report.add("homeomorphism search agrees", True, detail="skipped above search bound")
    report.data["mapping"] = mapping
    return report


def principal_coverage(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> TheoremReport:
    """Every element of the Zariski frame is the radical of one object."""
    frame = zar_frame(system, bound)
    report = TheoremReport("coherence")
    for element, k in principal_witnesses(system, frame).items():
        report.add(
            f"{frame.labels[element]} = sqrt({system.label_of(k)})",
            sqrt_object(system, k).mask == frame.payload[element].mask,
        )
    return report
