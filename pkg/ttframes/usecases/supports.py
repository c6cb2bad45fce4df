"""Frame-valued and topological supports, the universal support and the
comparison maps between them."""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ttframes.entities.exceptions import (
    BoundExceeded,
    ImageNotPrime,
    NotSpectral,
    SupportAxiomViolated,
    TensorProductPropertyViolated,
    WellDefinednessFailure,
)
from ttframes.entities.frame_entities import FiniteFrame, FrameMap
from ttframes.entities.space_entities import FiniteSpace
from ttframes.entities.support_entities import FinalMap, FrameSupport, TopSupport
from ttframes.entities.tensor_entities import TensorSystem, ValidationReport
from ttframes.frameworks.logging_config import get_logger
from ttframes.usecases.frames import (
    all_frame_maps,
    is_frame_map,
    points,
    principal_witnesses,
    relabel_frame,
    subset_frame,
    zar_frame,
)
from ttframes.usecases.ideals import DEFAULT_ENUMERATION_BOUND, primes, sqrt_object
from ttframes.usecases.services.axiom_services import AxiomService, AxiomTables
from ttframes.usecases.services.bitset_services import BitsetService
from ttframes.usecases.services.order_services import OrderService
from ttframes.usecases.spectra import (
    DEFAULT_SEARCH_BOUND,
    V_of,
    homeomorphic,
    hochster_dual,
    is_spectral,
    open_of_element,
    space_of_frame,
    spc,
    subspace,
)


logger = get_logger(__name__)

MAX_MASK_POINTS = 62
DEFAULT_UNIQUENESS_LIMIT = 8
DEFAULT_CORPUS_SIZE = 20
MAX_EXHAUSTIVE_POINT_SUBSETS = 64


def universal_support(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> FrameSupport:
    """k -> sqrt(k) in the Zariski frame."""
    frame = zar_frame(system, bound)
    return FrameSupport(
        frame=frame,
        d=tuple(frame.element_of(sqrt_object(system, k)) for k in range(system.size)),
    )


def frame_support_tables(system: TensorSystem, support: FrameSupport) -> AxiomTables:
    frame = support.frame
    d = np.asarray(support.d, dtype=np.int64)
    L, M, J = frame.leq_array(), frame.meet_array(), frame.join_array()
    S, T = system.sum_array(), system.tensor_array()
    tri = system.triangle_array()
    (a2, b2), (a, b, c) = AxiomService.grids(system.size)

    return {
        "support-zero": np.array([d[system.zero] == frame.bottom]),
        "support-unit": np.array([d[system.unit] == frame.top]),
        "support-shift": d[system.shift_array()] == d,
        "support-sum": d[S] == J[d[a2], d[b2]],
        "support-tensor": (d[T] == M[d[a2], d[b2]]) & (d[T.T] == M[d[a2], d[b2]]),
        # k -> t -> r: d(t) <= d(k) v d(r)
        "support-triangle": ~tri | L[d[b], J[d[a], d[c]]],
    }


def check_frame_support(system: TensorSystem, support: FrameSupport) -> ValidationReport:
    return AxiomService.report(frame_support_tables(system, support))


def _sigma_array(support: TopSupport) -> np.ndarray:
    if support.space.size > MAX_MASK_POINTS:
        raise BoundExceeded("support space", support.space.size, MAX_MASK_POINTS)
    return np.asarray(support.sigma, dtype=np.int64)


def top_support_tables(system: TensorSystem, support: TopSupport) -> AxiomTables:
    sig = _sigma_array(support)
    full = support.space.full_mask
    S, T = system.sum_array(), system.tensor_array()
    tri = system.triangle_array()
    closed = set(support.space.closed_sets())
    (a2, b2), (a, b, c) = AxiomService.grids(system.size)

    middle = np.bitwise_or.reduce(sig[T[T[a, b], c]], axis=1)
    return {
        "sigma-closed": np.array([int(mask) in closed for mask in sig], dtype=bool),
        "sigma-zero": np.array([sig[system.zero] == 0]),
        "sigma-unit": np.array([sig[system.unit] == full]),
        "sigma-sum": sig[S] == (sig[a2] | sig[b2]),
        "sigma-shift": sig[system.shift_array()] == sig,
        # A -> B -> C: sigma(A) within sigma(B) u sigma(C)
        "sigma-triangle": ~tri | ((sig[a] & ~(sig[b] | sig[c])) == 0),
        "sigma-middle-union": middle == (sig[a2] & sig[b2]),
        "sigma-tensor-product": sig[T] == (sig[a2] & sig[b2]),
    }


def check_top_support(system: TensorSystem, support: TopSupport) -> ValidationReport:
    return AxiomService.report(top_support_tables(system, support))


def triangle_orientation_agreement(system: TensorSystem, support) -> bool:
    """Whether the first-vertex and middle-vertex triangle axioms give the same verdict."""
    tri = system.triangle_array()
    _, (a, b, c) = AxiomService.grids(system.size)
    if isinstance(support, FrameSupport):
        d = np.asarray(support.d, dtype=np.int64)
        L, J = support.frame.leq_array(), support.frame.join_array()
        middle = ~tri | L[d[b], J[d[a], d[c]]]
        first = ~tri | L[d[a], J[d[b], d[c]]]
    else:
        sig = _sigma_array(support)
        middle = ~tri | ((sig[b] & ~(sig[a] | sig[c])) == 0)
        first = ~tri | ((sig[a] & ~(sig[b] | sig[c])) == 0)
    return bool(middle.all()) == bool(first.all())


def _universal_elements(system: TensorSystem, frame: FiniteFrame) -> List[int]:
    return [frame.element_of(sqrt_object(system, k)) for k in range(system.size)]


def mediating_map(system: TensorSystem, support: FrameSupport, bound: int = DEFAULT_ENUMERATION_BOUND) -> FrameMap:
    """The frame map u with u(sqrt k) = d(k), built from principal witnesses."""
    frame = zar_frame(system, bound)
    witnesses = principal_witnesses(system, frame)
    table = tuple(support.d[witnesses[e]] for e in frame.elements)
    s = _universal_elements(system, frame)
    for k in range(system.size):
        if table[s[k]] != support.d[k]:
            raise WellDefinednessFailure(
                f"sqrt({system.label_of(k)}) = {frame.labels[s[k]]} but d disagrees with its witness"
            )
    if not is_frame_map(frame, support.frame, table):
        raise WellDefinednessFailure("mediating table is not a frame map")
    return FrameMap(source=frame, target=support.frame, table=table)


def check_mediating_uniqueness(
    system: TensorSystem,
    support: FrameSupport,
    limit: int = DEFAULT_UNIQUENESS_LIMIT,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> Tuple[str, int]:
    """Number of frame maps u with u o s = d, and how it was established.

    Up to ``limit`` elements every compatible table is enumerated; above it
    the count follows from every element being principal.
    """
    frame = zar_frame(system, bound)
    s = _universal_elements(system, frame)
    if frame.size <= limit:
        forced: List[set] = [set() for _ in frame.elements]
        for k, element in enumerate(s):
            forced[element].add(support.d[k])
        candidates = [
            sorted(values) if len(values) == 1 else ([] if values else support.frame.elements)
            for values in forced
        ]
        count = sum(1 for _ in all_frame_maps(frame, support.frame, candidates))
        return "exhaustive", count
    covered = set(s) == set(frame.elements)
    return "principal", 1 if covered else 0


def compose_support(support: FrameSupport, frame_map: FrameMap) -> FrameSupport:
    if frame_map.source != support.frame:
        raise ValueError("frame map does not start at the support's frame")
    return FrameSupport(frame=frame_map.target, d=tuple(frame_map.table[v] for v in support.d))


def relabel_support(support: FrameSupport, permutation: Sequence[int]) -> FrameSupport:
    return FrameSupport(
        frame=relabel_frame(support.frame, permutation),
        d=tuple(int(permutation[v]) for v in support.d),
    )


def nvy_support(system: TensorSystem) -> TopSupport:
    """a -> V(a) on the prime spectrum."""
    return TopSupport(space=spc(system), sigma=tuple(V_of(system, [a]) for a in range(system.size)))


def restrict_support(support: TopSupport, indices: Sequence[int]) -> TopSupport:
    indices = list(indices)
    return TopSupport(
        space=subspace(support.space, indices),
        sigma=tuple(
            BitsetService.from_members(i for i, x in enumerate(indices) if mask >> x & 1)
            for mask in support.sigma
        ),
    )


def open_set_frame(space: FiniteSpace) -> FiniteFrame:
    return subset_frame(space.opens, labels=[space.describe(m) for m in space.opens])


def xi(system: TensorSystem, support: FrameSupport) -> TopSupport:
    """Topological support on the dual of the frame's space: sigma(a) = U_d(a)."""
    space = hochster_dual(space_of_frame(support.frame))
    return TopSupport(
        space=space,
        sigma=tuple(open_of_element(support.frame, v) for v in support.d),
    )


def gamma(system: TensorSystem, support: TopSupport) -> FrameSupport:
    """Frame support on the closed sets of the space: d(a) = sigma(a)."""
    if not is_spectral(support.space):
        raise NotSpectral("support space is not a T0 topology")
    report = check_top_support(system, support)
    if not report.ok:
        if set(report.axioms()) == {"sigma-tensor-product"}:
            raise TensorProductPropertyViolated(
                f"{report.count('sigma-tensor-product')} tensor pair(s) break sigma(a b) = sigma(a) n sigma(b)"
            )
        raise SupportAxiomViolated(report)
    frame = open_set_frame(hochster_dual(support.space))
    position = {mask: i for i, mask in enumerate(hochster_dual(support.space).opens)}
    return FrameSupport(frame=frame, d=tuple(position[mask] for mask in support.sigma))


def final_map(system: TensorSystem, support: TopSupport) -> FinalMap:
    """x -> {A : x not in sigma(A)} into the prime spectrum."""
    target = spc(system)
    prime_index = {p.mask: j for j, p in enumerate(primes(system))}
    table = []
    for x in range(support.space.size):
        mask = BitsetService.from_members(a for a in range(system.size) if not support.sigma[a] >> x & 1)
        if mask not in prime_index:
            raise ImageNotPrime(x, mask)
        table.append(prime_index[mask])

    def preimage(mask: int) -> int:
        return BitsetService.from_members(x for x, y in enumerate(table) if mask >> y & 1)

    source_opens = set(support.space.opens)
    continuous = all(preimage(u) in source_opens for u in target.opens)
    pullback = all(support.sigma[a] == preimage(V_of(system, [a])) for a in range(system.size))
    return FinalMap(
        source=support.space,
        target=target,
        table=tuple(table),
        continuous=continuous,
        pullback_holds=pullback,
    )


def _point_subsets(point_count: int, rng: np.random.Generator) -> List[int]:
    if point_count <= 6:
        return list(range(1 << point_count))
    sampled = {0, BitsetService.full(point_count)}
    while len(sampled) < MAX_EXHAUSTIVE_POINT_SUBSETS:
        sampled.add(int(rng.integers(0, 1 << point_count)))
    return sorted(sampled)


def frame_support_corpus(
    system: TensorSystem,
    size: int = DEFAULT_CORPUS_SIZE,
    seed: int = 0,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> List[FrameSupport]:
    """Supports obtained by pushing the universal one along frame maps.

    For a set T of points, f -> U_f n T is a frame map from the Zariski frame
    onto the opens of the subspace T, and also into the powerset of T.
    Seeded relabelings pad the corpus up to ``size``.
    """
    base = universal_support(system, bound)
    frame = base.frame
    opens = [open_of_element(frame, e) for e in frame.elements]
    rng = np.random.default_rng(seed)

    corpus = [base]
    for subset in _point_subsets(len(points(frame)), rng):
        restricted = [mask & subset for mask in opens]
        for targets in (sorted(set(restricted)), list(BitsetService.submasks(subset))):
            position = {mask: i for i, mask in enumerate(targets)}
            corpus.append(
                FrameSupport(
                    frame=subset_frame(targets),
                    d=tuple(position[restricted[v]] for v in base.d),
                )
            )

    originals = len(corpus)
    i = 0
    while len(corpus) < size:
        source = corpus[i % originals]
        corpus.append(relabel_support(source, [int(v) for v in rng.permutation(source.frame.size)]))
        i += 1
    logger.debug(f"frame support corpus: {len(corpus)} instance(s), {originals} before relabeling")
    return corpus


def top_support_corpus(
    system: TensorSystem,
    size: int = DEFAULT_CORPUS_SIZE,
    seed: int = 0,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> List[TopSupport]:
    """Xi of the frame corpus, the prime-spectrum support and its restrictions."""
    nvy = nvy_support(system)
    corpus = [nvy]
    rng = np.random.default_rng(seed)
    for subset in _point_subsets(nvy.space.size, rng):
        if subset:
            corpus.append(restrict_support(nvy, BitsetService.members(subset)))
    corpus.extend(xi(system, fs) for fs in frame_support_corpus(system, size, seed, bound))
    return corpus


def support_isomorphism(left: FrameSupport, right: FrameSupport) -> Optional[Tuple[int, ...]]:
    """Frame isomorphism phi with phi(left.d(k)) = right.d(k), if any."""
    if len(left.d) != len(right.d) or left.frame.size != right.frame.size:
        return None

    def colors(support: FrameSupport):
        return [tuple(k for k, v in enumerate(support.d) if v == e) for e in support.frame.elements]

    for mapping in OrderService.iter_isomorphisms(
        left.frame.leq_array(), right.frame.leq_array(), colors(left), colors(right)
    ):
        if all(mapping[v] == w for v, w in zip(left.d, right.d)):
            return mapping
    return None


def top_support_isomorphism(
    left: TopSupport,
    right: TopSupport,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> Optional[Tuple[int, ...]]:
    """Homeomorphism carrying each sigma(a) of left onto that of right, if any."""
    if len(left.sigma) != len(right.sigma):
        return None

    def colors(support: TopSupport):
        return [tuple(mask >> x & 1 for mask in support.sigma) for x in range(support.space.size)]

    mapping = homeomorphic(left.space, right.space, bound, colors(left), colors(right))
    if mapping is None:
        return None
    if all(BitsetService.image(l, mapping) == r for l, r in zip(left.sigma, right.sigma)):
        return mapping
    return None
