"""Thick tensor ideals: closure, enumeration, primality and radicals.

Subsets of objects are bit masks (bit i set when object i is a member).
The closure is the least fixpoint of the five generation rules: shift and
its inverse, finite sums, two-sided tensoring, extensions along triangles
and summands.
"""

from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Tuple, Union

from ttframes.entities.exceptions import BoundExceeded
from ttframes.entities.ideal_entities import Ideal, PrimeClassification
from ttframes.entities.tensor_entities import TensorSystem
from ttframes.frameworks.logging_config import get_logger, log_execution_time
from ttframes.usecases.services.bitset_services import BitsetService
from ttframes.usecases.tensor_systems import power_orbit


logger = get_logger(__name__)

DEFAULT_ENUMERATION_BOUND = 16


class RadicalMethod(str, Enum):
    VIA_PRIMES = "via_primes"
    VIA_ROOTS = "via_roots"


class EnumerationStrategy(str, Enum):
    FRONTIER = "frontier"
    SUBSETS = "subsets"


class _ClosureRules:
    """Per-system rule tables for the closure fixpoint."""

    def __init__(self, system: TensorSystem):
        n = system.size
        preimages = system.shift_preimages()
        self.size = n
        self.zero_bit = 1 << system.zero
        self.sum = system.sum
        self.single_step: List[int] = []
        for a in range(n):
            step = 1 << system.shift[a]
            step |= BitsetService.from_members(preimages[a])
            step |= BitsetService.from_members(system.tensor[a])
            step |= BitsetService.from_members(system.tensor[t][a] for t in range(n))
            self.single_step.append(step)
        for s, t in system.summands:
            self.single_step[t] |= 1 << s
        self.extensions: List[Tuple[int, int]] = [
            ((1 << a) | (1 << c), 1 << b) for a, b, c in system.triangles
        ]

    def close(self, mask: int) -> int:
        mask |= self.zero_bit
        while True:
            grown = mask
            members = BitsetService.members(mask)
            for a in members:
                grown |= self.single_step[a]
            for a in members:
                row = self.sum[a]
                for b in members:
                    grown |= 1 << row[b]
            for ends, middle in self.extensions:
                if ends & mask == ends:
                    grown |= middle
            if grown == mask:
                return mask
            mask = grown


@lru_cache(maxsize=128)
def _rules(system: TensorSystem) -> _ClosureRules:
    return _ClosureRules(system)


def _as_mask(subset: Union[int, Iterable[int], Ideal]) -> int:
    if isinstance(subset, Ideal):
        return subset.mask
    if isinstance(subset, int):
        return subset
    return BitsetService.from_members(subset)


def close_mask(system: TensorSystem, mask: int) -> int:
    return _rules(system).close(mask)


def close(system: TensorSystem, subset: Union[int, Iterable[int], Ideal] = ()) -> Ideal:
    """Smallest thick tensor ideal containing the given objects."""
    return Ideal(mask=close_mask(system, _as_mask(subset)), universe=system.size)


def is_ideal(system: TensorSystem, mask: int) -> bool:
    return bool(mask & 1) and close_mask(system, mask) == mask


def principal_ideal(system: TensorSystem, k: int) -> Ideal:
    return close(system, [k])


@lru_cache(maxsize=128)
def _ideal_masks(system: TensorSystem, strategy: EnumerationStrategy) -> Tuple[int, ...]:
    rules = _rules(system)
    if strategy is EnumerationStrategy.SUBSETS:
        found = {rules.close(subset) for subset in range(1 << system.size)}
    else:
        start = rules.close(0)
        found = {start}
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for a in range(system.size):
                if current >> a & 1:
                    continue
                grown = rules.close(current | (1 << a))
                if grown not in found:
                    found.add(grown)
                    frontier.append(grown)
    return tuple(sorted(found))


@log_execution_time()
def enumerate_thick_ideals(
    system: TensorSystem,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    strategy: Union[str, EnumerationStrategy] = EnumerationStrategy.FRONTIER,
) -> List[Ideal]:
    """Every thick tensor ideal, sorted by bit mask."""
    if system.size > bound:
        raise BoundExceeded("object set", system.size, bound)
    masks = _ideal_masks(system, EnumerationStrategy(strategy))
    logger.debug(f"{len(masks)} thick ideal(s) over {system.size} object(s)")
    return [Ideal(mask=mask, universe=system.size) for mask in masks]


def ideal_product(system: TensorSystem, left: Ideal, right: Ideal) -> Ideal:
    return Ideal(mask=_product_mask(system, left.mask, right.mask), universe=system.size)


@lru_cache(maxsize=4096)
def _product_mask(system: TensorSystem, left: int, right: int) -> int:
    tensors = 0
    for i, j in product(BitsetService.members(left), BitsetService.members(right)):
        tensors |= 1 << system.tensor[i][j]
    return close_mask(system, tensors)


def classify(system: TensorSystem, ideal: Ideal) -> PrimeClassification:
    """Primality over ideal pairs and complete primality over object pairs.

    Witnesses are the first counterexample in canonical order: ideal pairs by
    mask, object pairs by index.
    """
    if ideal.is_whole:
        return PrimeClassification(is_proper=False, is_prime=False, is_completely_prime=False)

    p = ideal.mask
    outside = [
        mask for mask in _ideal_masks(system, EnumerationStrategy.FRONTIER)
        if not BitsetService.is_subset(mask, p)
    ]
    prime_witness = None
    for left, right in product(outside, repeat=2):
        if BitsetService.is_subset(_product_mask(system, left, right), p):
            prime_witness = (
                Ideal(mask=left, universe=system.size),
                Ideal(mask=right, universe=system.size),
            )
            break

    complete_witness = None
    missing = [a for a in range(system.size) if not p >> a & 1]
    for a, b in product(missing, repeat=2):
        if p >> system.tensor[a][b] & 1:
            complete_witness = (a, b)
            break

    is_prime = prime_witness is None
    return PrimeClassification(
        is_proper=True,
        is_prime=is_prime,
        is_completely_prime=is_prime and complete_witness is None,
        prime_witness=prime_witness,
        complete_witness=complete_witness if is_prime else None,
    )


@lru_cache(maxsize=128)
def _prime_masks(system: TensorSystem) -> Tuple[int, ...]:
    return tuple(
        mask for mask in _ideal_masks(system, EnumerationStrategy.FRONTIER)
        if classify(system, Ideal(mask=mask, universe=system.size)).is_prime
    )


def primes(system: TensorSystem) -> List[Ideal]:
    return [Ideal(mask=mask, universe=system.size) for mask in _prime_masks(system)]


def completely_primes(system: TensorSystem) -> List[Ideal]:
    return [p for p in primes(system) if classify(system, p).is_completely_prime]


def check_assumption(system: TensorSystem) -> Tuple[bool, List[Ideal]]:
    """Whether every prime is completely prime, with the primes that are not."""
    counterexamples = [p for p in primes(system) if not classify(system, p).is_completely_prime]
    if counterexamples:
        logger.info(f"{len(counterexamples)} prime(s) are not completely prime")
    return not counterexamples, counterexamples


def radical(
    system: TensorSystem,
    ideal: Ideal,
    method: Union[str, RadicalMethod] = RadicalMethod.VIA_PRIMES,
) -> Ideal:
    """Radical closure, either as the meet of the primes above the ideal or
    as the ideal generated by its roots. An ideal below no prime has the
    whole category as radical."""
    method = RadicalMethod(method)
    if method is RadicalMethod.VIA_PRIMES:
        mask = BitsetService.full(system.size)
        for p in _prime_masks(system):
            if BitsetService.is_subset(ideal.mask, p):
                mask &= p
        return Ideal(mask=mask, universe=system.size)

    roots = [
        k for k in range(system.size)
        if any(ideal.mask >> power & 1 for power in power_orbit(system, k))
    ]
    return close(system, roots)


def is_radical(system: TensorSystem, ideal: Ideal) -> bool:
    return radical(system, ideal).mask == ideal.mask


def sqrt_object(system: TensorSystem, k: int) -> Ideal:
    """The radical of the principal ideal of k."""
    return radical(system, principal_ideal(system, k))


def ideal_label(system: TensorSystem, ideal: Ideal) -> str:
    return ideal.describe(system.labels)


def describe_ideals(system: TensorSystem, ideals: Iterable[Ideal]) -> Dict[str, List[str]]:
    return {ideal_label(system, ideal): ideal.labels(system.labels) for ideal in ideals}
