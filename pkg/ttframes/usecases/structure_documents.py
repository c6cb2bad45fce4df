"""Plain-dict views of systems and the structures computed from them.

Every builder returns JSON-ready data keyed by labels; the emitters add the
schema tag and choose the output format. Ordered structures carry a
``hasse`` entry with node labels and cover edges ``[lower, upper]``.
"""

from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ttframes.entities.ideal_entities import Ideal
from ttframes.entities.space_entities import FiniteSpace
from ttframes.entities.tensor_entities import TensorSystem, ValidationReport
from ttframes.usecases.frames import points, zar_frame
from ttframes.usecases.ideals import (
    DEFAULT_ENUMERATION_BOUND,
    RadicalMethod,
    check_assumption,
    classify,
    enumerate_thick_ideals,
    ideal_label,
    radical,
)
from ttframes.usecases.services.order_services import OrderService
from ttframes.usecases.spectra import (
    DEFAULT_SEARCH_BOUND,
    hochster_dual,
    homeomorphic,
    is_spectral,
    space_of_frame,
    spc,
    specialization,
)
from ttframes.usecases.supports import (
    check_frame_support,
    check_top_support,
    nvy_support,
    universal_support,
)
from ttframes.usecases.tensor_systems import validate


Document = Dict[str, Any]


def hasse(labels: Sequence[str], leq: np.ndarray) -> Document:
    covers = OrderService.covers(leq)
    return {
        "nodes": list(labels),
        "edges": [[int(i), int(j)] for i, j in np.argwhere(covers)],
    }


def system_document(system: TensorSystem) -> Document:
    return {
        "objects": system.labels,
        "zero": system.zero,
        "unit": system.unit,
        "shift": list(system.shift),
        "sum": [list(row) for row in system.sum],
        "tensor": [list(row) for row in system.tensor],
        "triangles": [list(t) for t in system.triangles],
        "summands": [list(p) for p in system.summands],
    }


def validation_document(system: TensorSystem, report: Optional[ValidationReport] = None) -> Document:
    report = report or validate(system)
    return {
        "ok": report.ok,
        "violations": [
            {"axiom": v.axiom, "witness": [system.label_of(i) for i in v.witness]}
            for v in report.violations
        ],
    }


def _subset_order(ideals: Sequence[Ideal]) -> np.ndarray:
    n = len(ideals)
    return np.array([[a.issubset(b) for b in ideals] for a in ideals], dtype=bool).reshape(n, n)


def ideals_document(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> Document:
    ideals = enumerate_thick_ideals(system, bound=bound)
    labels = [ideal_label(system, ideal) for ideal in ideals]
    return {
        "ideals": labels,
        "radical": [radical(system, ideal) == ideal for ideal in ideals],
        "hasse": hasse(labels, _subset_order(ideals)),
    }


def _witness(system: TensorSystem, witness) -> Optional[List[str]]:
    if witness is None:
        return None
    return [ideal_label(system, w) if isinstance(w, Ideal) else system.label_of(w) for w in witness]


def primes_document(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> Document:
    rows = []
    for ideal in enumerate_thick_ideals(system, bound=bound):
        verdict = classify(system, ideal)
        rows.append(
            {
                "ideal": ideal_label(system, ideal),
                "proper": verdict.is_proper,
                "prime": verdict.is_prime,
                "completely_prime": verdict.is_completely_prime,
                "witness": _witness(system, verdict.witness),
            }
        )
    holds, counterexamples = check_assumption(system)
    return {
        "classification": rows,
        "assumption": holds,
        "counterexamples": [ideal_label(system, p) for p in counterexamples],
    }


def radical_document(system: TensorSystem, ideal: Ideal) -> Document:
    via_primes = radical(system, ideal, RadicalMethod.VIA_PRIMES)
    via_roots = radical(system, ideal, RadicalMethod.VIA_ROOTS)
    return {
        "ideal": ideal_label(system, ideal),
        "via_primes": ideal_label(system, via_primes),
        "via_roots": ideal_label(system, via_roots),
        "agree": via_primes == via_roots,
    }


def zar_document(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> Document:
    frame = zar_frame(system, bound)
    return {
        "elements": list(frame.labels),
        "bottom": frame.labels[frame.bottom],
        "top": frame.labels[frame.top],
        "points": [frame.labels[p.prime_element] for p in points(frame)],
        "hasse": hasse(frame.labels, frame.leq_array()),
    }


def space_document(space: FiniteSpace) -> Document:
    return {
        "points": list(space.labels),
        "opens": [space.describe(mask) for mask in space.opens],
        "closed": [space.describe(mask) for mask in space.closed_sets()],
        "spectral": is_spectral(space),
        "hasse": hasse(space.labels, specialization(space)),
    }


def spc_document(system: TensorSystem) -> Document:
    return space_document(spc(system))


def dual_document(
    system: TensorSystem,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Document:
    """Hochster dual of the Zariski frame's space, matched against the spectrum."""
    dual = hochster_dual(space_of_frame(zar_frame(system, bound)))
    spectrum = spc(system)
    mapping = homeomorphic(dual, spectrum, search_bound)
    document = space_document(dual)
    document["homeomorphism"] = (
        None if mapping is None else {dual.labels[x]: spectrum.labels[y] for x, y in enumerate(mapping)}
    )
    return document


def support_document(system: TensorSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> Document:
    universal = universal_support(system, bound)
    nvy = nvy_support(system)
    return {
        "universal": {
            system.label_of(k): universal.frame.labels[v] for k, v in enumerate(universal.d)
        },
        "universal_violations": check_frame_support(system, universal).axioms(),
        "nvy": {system.label_of(k): nvy.space.describe(mask) for k, mask in enumerate(nvy.sigma)},
        "nvy_violations": check_top_support(system, nvy).axioms(),
    }


def bundle_document(
    system: TensorSystem,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> Document:
    """Every structure of one system.

    The Zariski frame and the dual need every prime to be completely prime;
    they are left out when that fails.
    """
    structures: Document = {
        "system": system_document(system),
        "ideals": ideals_document(system, bound),
        "primes": primes_document(system, bound),
        "spc": spc_document(system),
    }
    if structures["primes"]["assumption"]:
        structures["zar"] = zar_document(system, bound)
        structures["dual"] = dual_document(system, bound, search_bound)
        structures["support"] = support_document(system, bound)
    return {"structures": structures}
