from typing import Any, List, Optional


class TTFramesError(Exception):
    """Base class for every error raised by ttframes."""


class SystemFormatError(TTFramesError):
    """Malformed system document. Carries the 1-based position when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}, column {column or 1}: "
        super().__init__(f"{location}{message}")


class UndeclaredObjectError(SystemFormatError):
    """A table or relation references a label missing from [objects]."""


class NonTotalTableError(SystemFormatError):
    """The sum or tensor table cannot be completed to a total operation."""


class UnknownSystemError(TTFramesError):
    """Requested builtin name is not in the catalogue."""


class GenerationFailure(TTFramesError):
    """Random generation exhausted its retries without a valid system."""


class BoundExceeded(TTFramesError):
    """A search or enumeration would exceed its configured size bound."""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what} has size {size}, above the bound {bound}")


class AssumptionViolated(TTFramesError):
    """Some prime thick ideal is not completely prime."""

    def __init__(self, counterexamples: List[Any]):
        self.counterexamples = list(counterexamples)
        super().__init__(
            f"{len(self.counterexamples)} prime ideal(s) are not completely prime"
        )


class NotALattice(TTFramesError):
    """An order relation lacks a meet or a join for some pair."""

    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message)


class NotSpectral(TTFramesError):
    """A finite space is not a T0 topology."""


class TensorProductPropertyViolated(TTFramesError):
    """A support's closed images do not form a sublattice."""


class SupportAxiomViolated(TTFramesError):
    """A support fails one of its axioms; the report lists the witnesses."""

    def __init__(self, report: Any):
        self.report = report
        axioms = sorted({v.axiom for v in getattr(report, "violations", [])})
        super().__init__(f"support axioms violated: {', '.join(axioms) or 'unknown'}")


class WellDefinednessFailure(TTFramesError):
    """The mediating map is ambiguous or is not a frame map."""


class ImageNotPrime(TTFramesError):
    """The final map sent a point to a set that is not a prime thick ideal."""

    def __init__(self, point: int, mask: int):
        self.point = point
        self.mask = mask
        super().__init__(f"image of point {point} is not a prime thick ideal")
