"""Shipped example systems."""

from functools import lru_cache
from typing import Callable, Dict, List

from ttframes.entities.exceptions import UnknownSystemError
from ttframes.entities.tensor_entities import TensorSystem
from ttframes.frameworks.logging_config import get_logger
from ttframes.frameworks.system_file_loader import load_system
from ttframes.usecases.tensor_systems import matrix_units, validate


logger = get_logger(__name__)


TRIVIAL = """
[objects]
0 u
[zero]
0
[unit]
u
[options]
complete_triangles = true
"""

TWO_IDEM = """
# two orthogonal idempotents x, y with u = x + y
[objects]
0 x y u
[zero]
0
[unit]
u
[sum]
x <= u
y <= u
[tensor]
tensor(x,x) = x
tensor(y,y) = y
tensor(x,y) = 0
tensor(y,x) = 0
[options]
complete_triangles = true
"""

CHAIN3 = """
# chain 0 < x' < x < u; x squares to x', so <x'> is not radical
[objects]
0 x' x u
[zero]
0
[unit]
u
[sum]
x' <= x
x <= u
[tensor]
tensor(x,x) = x'
tensor(x,x') = x'
tensor(x',x) = x'
tensor(x',x') = x'
[options]
complete_triangles = true
"""

NONCOMM4 = """
# chain 0 < a < b < u; a is nilpotent, b absorbs a only from the left
[objects]
0 a b u
[zero]
0
[unit]
u
[sum]
a <= b
b <= u
[tensor]
tensor(a,a) = 0
tensor(a,b) = 0
tensor(b,a) = a
tensor(b,b) = b
[options]
complete_triangles = true
"""

DEGENERATE = """
# zero = unit: the only ideal is the whole category
[objects]
0
[zero]
0
[unit]
0
[options]
complete_triangles = true
"""

DOCUMENTS: Dict[str, str] = {
    "trivial": TRIVIAL,
    "two_idem": TWO_IDEM,
    "chain3": CHAIN3,
    "noncomm4": NONCOMM4,
    "degenerate": DEGENERATE,
}

_GENERATED: Dict[str, Callable[[], TensorSystem]] = {
    "matrix_units": matrix_units,
}


def builtin_names() -> List[str]:
    return list(DOCUMENTS) + list(_GENERATED)


@lru_cache(maxsize=None)
def builtin(name: str) -> TensorSystem:
    """Return a validated builtin system.

    Raises:
        UnknownSystemError: the name is not in the catalogue
    """
    if name in DOCUMENTS:
        system = load_system(DOCUMENTS[name])
    elif name in _GENERATED:
        system = _GENERATED[name]()
    else:
        raise UnknownSystemError(f"unknown builtin {name!r}; choose from {', '.join(builtin_names())}")
    report = validate(system)
    if not report.ok:
        logger.error(f"builtin {name} fails {report.axioms()}")
    return system
