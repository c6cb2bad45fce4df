"""Validation, completion and random generation of finite tensor systems."""

from itertools import product
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Set, Tuple

import numpy as np

from ttframes.entities.exceptions import GenerationFailure
from ttframes.entities.tensor_entities import ObjectId, TensorSystem, ValidationReport, Violation
from ttframes.frameworks.logging_config import get_logger, log_execution_time
from ttframes.usecases.services.axiom_services import AxiomService, AxiomTables


logger = get_logger(__name__)

MAX_GENERATION_ATTEMPTS = 64
MAX_RANDOM_OBJECTS = 12
MAX_TRIANGLE_TRIES = 16


def axiom_tables(system: TensorSystem) -> AxiomTables:
    """Truth table of every structural axiom, keyed by axiom name."""
    n = system.size
    S = system.sum_array()
    T = system.tensor_array()
    sh = system.shift_array()
    tri = system.triangle_array()
    summ = system.summand_array()
    z, u = system.zero, system.unit
    idx = np.arange(n)
    (a2, b2), (a, b, c) = AxiomService.grids(n)

    tables: AxiomTables = {}
    tables["sum-associative"] = S[S[a, b], c] == S[a, S[b, c]]
    tables["sum-commutative"] = S == S.T
    tables["sum-idempotent"] = S[idx, idx] == idx
    tables["sum-zero-identity"] = (S[z, idx] == idx) & (S[idx, z] == idx)
    tables["tensor-associative"] = T[T[a, b], c] == T[a, T[b, c]]
    tables["tensor-unit"] = (T[u, idx] == idx) & (T[idx, u] == idx)
    tables["tensor-zero"] = (T[z, idx] == z) & (T[idx, z] == z)
    # witness (a, b, c) covers both (a+b)c and c(a+b)
    tables["tensor-sum-distributivity"] = (
        (T[S[a, b], c] == S[T[a, c], T[b, c]]) & (T[c, S[a, b]] == S[T[c, a], T[c, b]])
    )
    tables["shift-bijective"] = np.bincount(sh, minlength=n) == 1
    tables["shift-zero"] = (idx != z) | (sh == z)
    tables["shift-sum"] = sh[S] == S[sh[a2], sh[b2]]
    tables["shift-tensor"] = sh[T] == T[sh[a2], b2]
    tables["triangles-rotation-closed"] = ~tri | tri[b, c, sh[a]]
    tables["triangles-split"] = tri[a2, S, b2]
    tables["summands-of-sum"] = summ[z, S] & summ[a2, S] & summ[b2, S] & summ[S, S]
    tables["summands-reflexive"] = summ[idx, idx]
    tables["summands-transitive"] = ~(summ[a, b] & summ[b, c]) | summ[a, c]
    return tables


def validate(system: TensorSystem) -> ValidationReport:
    report = AxiomService.report(axiom_tables(system))
    if not report.ok:
        logger.info(f"System failed {len(report.violations)} axiom instance(s): {report.axioms()}")
    return report


def replay_violation(system: TensorSystem, violation: Violation) -> bool:
    """True when the reported witness really falsifies its axiom."""
    return not AxiomService.holds_at(axiom_tables(system), violation.axiom, violation.witness)


def complete_triangles(system: TensorSystem) -> TensorSystem:
    """Add every split triangle and close the set under rotation."""
    triangles = set(system.triangles)
    for a, b in product(range(system.size), repeat=2):
        triangles.add((a, system.sum[a][b], b))
    frontier = list(triangles)
    while frontier:
        a, b, c = frontier.pop()
        rotated = (b, c, system.shift[a])
        if rotated not in triangles:
            triangles.add(rotated)
            frontier.append(rotated)
    return system.model_copy(update={"triangles": tuple(sorted(triangles))})


def order_leq(system: TensorSystem) -> np.ndarray:
    """The order induced by the sum: a <= b iff a + b = b."""
    S = system.sum_array()
    return S == np.arange(system.size)[None, :]


def derive_summands(size: int, sum_table: Sequence[Sequence[int]]) -> Tuple[Tuple[int, int], ...]:
    return tuple(
        (s, t) for s in range(size) for t in range(size) if sum_table[s][t] == t
    )


def power_orbit(system: TensorSystem, k: int) -> List[int]:
    """Distinct tensor powers k, k^2, ... up to the first repetition."""
    powers = [k]
    seen = {k}
    while True:
        following = system.tensor[powers[-1]][k]
        if following in seen:
            return powers
        seen.add(following)
        powers.append(following)


def semiring_system(
    elements: Sequence[Hashable],
    join: Callable,
    compose: Callable,
    labels: Sequence[str],
    extra_triangles: Sequence[Tuple[int, int, int]] = (),
    shift_by: Optional[Hashable] = None,
) -> TensorSystem:
    """Tensor system of a finite idempotent semiring listed zero first.

    The shift is left multiplication by the invertible element ``shift_by``,
    or the identity when it is omitted. The summand relation is the sum order.
    """
    index = {element: i for i, element in enumerate(elements)}
    n = len(elements)
    sum_table = tuple(tuple(index[join(x, y)] for y in elements) for x in elements)
    tensor_table = tuple(tuple(index[compose(x, y)] for y in elements) for x in elements)
    unit = _find_unit(tensor_table, n)
    system = TensorSystem(
        objects=tuple(ObjectId(index=i, label=label) for i, label in enumerate(labels)),
        zero=0,
        unit=unit,
        shift=tuple(range(n)) if shift_by is None else tuple(index[compose(shift_by, x)] for x in elements),
        sum=sum_table,
        tensor=tensor_table,
        triangles=tuple(extra_triangles),
        summands=derive_summands(n, sum_table),
    )
    return complete_triangles(system)


def _find_unit(tensor_table, n: int) -> int:
    for candidate in range(n):
        if all(tensor_table[candidate][x] == x and tensor_table[x][candidate] == x for x in range(n)):
            return candidate
    raise ValueError("semiring has no multiplicative unit")


def _bool_matmul(size: int) -> Callable:
    def compose(left, right):
        return tuple(
            int(any(left[i * size + k] and right[k * size + j] for k in range(size)))
            for i in range(size) for j in range(size)
        )
    return compose


def _pointwise_or(left, right):
    return tuple(max(x, y) for x, y in zip(left, right))


def matrix_units() -> TensorSystem:
    """Boolean 2x2 matrices: OR as sum, matrix product as tensor.

    Its only prime ideal {0} is not completely prime, since E22 E12 = 0.
    """
    elements = [tuple((code >> shift) & 1 for shift in (3, 2, 1, 0)) for code in range(16)]
    labels = ["m" + "".join(str(bit) for bit in element) for element in elements]
    return semiring_system(elements, _pointwise_or, _bool_matmul(2), labels)


def _chain_compose(left, right):
    # (left o right)(i) = left(right(i))
    return tuple(left[right[i]] for i in range(len(right)))


def _close_semiring(generators, zero, unit, join, compose, limit: int) -> Optional[List]:
    elements = {zero, unit, *generators}
    if len(elements) > limit:
        return None
    changed = True
    while changed:
        changed = False
        current = sorted(elements)
        for x, y in product(current, repeat=2):
            for z in (join(x, y), compose(x, y)):
                if z not in elements:
                    elements.add(z)
                    changed = True
                    if len(elements) > limit:
                        return None
    middle = sorted(elements - {zero, unit})
    return [zero, *middle, unit]


def _central_units(elements: Sequence[Hashable], compose: Callable) -> List[Hashable]:
    """Invertible elements commuting with everything; the unit is listed last."""
    unit = elements[-1]
    return [
        x for x in elements
        if any(compose(x, y) == unit == compose(y, x) for y in elements)
        and all(compose(x, t) == compose(t, x) for t in elements)
    ]


def _random_relation_semiring(rng: np.random.Generator, limit: int):
    atoms = int(rng.integers(1, 4))
    zero = tuple([0] * atoms * atoms)
    unit = tuple(int(i == j) for i in range(atoms) for j in range(atoms))
    generators = []
    if atoms > 1 and rng.integers(0, 2) == 1:
        # permutation matrices are the invertible relations
        image = rng.permutation(atoms)
        generators.append(tuple(int(image[i] == j) for i in range(atoms) for j in range(atoms)))
    count = int(rng.integers(0 if generators else 1, 3))
    generators.extend(tuple(int(v) for v in rng.integers(0, 2, size=atoms * atoms)) for _ in range(count))
    join, compose = _pointwise_or, _bool_matmul(atoms)
    return _close_semiring(generators, zero, unit, join, compose, limit), join, compose


def _random_chain_semiring(rng: np.random.Generator, limit: int):
    # monotone maps of the chain 0 < 1 < ... < top that fix 0
    top = int(rng.integers(1, 5))
    zero = tuple([0] * (top + 1))
    unit = tuple(range(top + 1))
    count = int(rng.integers(1, 3))
    generators = [
        (0, *sorted(int(v) for v in rng.integers(0, top + 1, size=top)))
        for _ in range(count)
    ]
    return _close_semiring(generators, zero, unit, _pointwise_or, _chain_compose, limit), _pointwise_or, _chain_compose


def _tensor_closure(system: TensorSystem, triangles: Set[Tuple[int, int, int]]) -> Set[Tuple[int, int, int]]:
    """Close a triangle set under rotation and tensoring with any object on either side."""
    T, sh = system.tensor, system.shift
    closed = set(triangles)
    frontier = list(closed)
    while frontier:
        a, b, c = frontier.pop()
        images = [(b, c, sh[a])]
        for t in range(system.size):
            images.append((T[t][a], T[t][b], T[t][c]))
            images.append((T[a][t], T[b][t], T[c][t]))
        for image in images:
            if image not in closed:
                closed.add(image)
                frontier.append(image)
    return closed


def _collapses(triangle: Tuple[int, int, int], zero: int) -> bool:
    # two zero vertices force the third into every ideal
    return triangle.count(zero) == 2


def _extra_triangles(rng: np.random.Generator, system: TensorSystem) -> List[Tuple[int, int, int]]:
    """Up to two arbitrary triples whose tensor closure keeps ``{0}`` thick.

    The returned list is the closure itself, ready to be added to the system.
    """
    closed = set(system.triangles)
    candidates = [t for t in product(range(system.size), repeat=3) if t not in closed]
    count = int(rng.integers(0, 3))
    accepted = 0
    for i in rng.permutation(len(candidates))[:MAX_TRIANGLE_TRIES]:
        if accepted == count:
            break
        grown = _tensor_closure(system, closed | {candidates[int(i)]})
        if any(_collapses(t, system.zero) for t in grown):
            continue
        closed = grown
        accepted += 1
    return sorted(closed - set(system.triangles))


@log_execution_time()
def random_system(seed: int, max_objects: int) -> TensorSystem:
    """Seeded random system built from a finite semiring of join-endomorphisms.

    The carrier is either Boolean relations on up to three atoms or monotone
    zero-preserving maps of a short chain. The shift is left multiplication
    by a random central invertible element. Up to two arbitrary triangles
    are added together with their images under rotation and tensoring.
    Every generated system passes
    ``validate``; the same seed always yields the same system.
    """
    if not 2 <= max_objects <= MAX_RANDOM_OBJECTS:
        raise ValueError(f"max_objects must lie in [2, {MAX_RANDOM_OBJECTS}], got {max_objects}")

    rng = np.random.default_rng(seed)
    # the first half of the attempts reject carriers below a drawn size
    wanted = int(rng.integers(2, max_objects + 1))
    for attempt in range(MAX_GENERATION_ATTEMPTS):
        carrier = _random_relation_semiring if rng.integers(0, 2) == 0 else _random_chain_semiring
        elements, join, compose = carrier(rng, max_objects)
        if elements is None or (len(elements) < wanted and attempt < MAX_GENERATION_ATTEMPTS // 2):
            continue

        n = len(elements)
        labels = ["0", *(f"a{i}" for i in range(1, n - 1)), "u"]
        units = _central_units(elements, compose)
        sigma = units[int(rng.integers(0, len(units)))]
        base = semiring_system(elements, join, compose, labels, shift_by=sigma)
        extra = _extra_triangles(rng, base)
        system = semiring_system(elements, join, compose, labels, extra_triangles=extra, shift_by=sigma)
        logger.debug(
            f"seed {seed}: {n} objects, {len(extra)} extra triangle(s) after {attempt + 1} attempt(s)"
        )
        return system

    raise GenerationFailure(
        f"no system with at most {max_objects} objects after {MAX_GENERATION_ATTEMPTS} attempts (seed {seed})"
    )


def describe_violations(system: TensorSystem, report: ValidationReport) -> Dict[str, List[str]]:
    grouped: Dict[str, List[str]] = {}
    for violation in report.violations:
        grouped.setdefault(violation.axiom, []).append(violation.describe(system.labels))
    return grouped
