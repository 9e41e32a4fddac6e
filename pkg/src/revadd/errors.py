"""Exception types raised across the package."""


class CircuitError(Exception):
    """Base class for every error raised by revadd."""


class LayoutError(CircuitError):
    """A wire index falls outside the circuit width, or register wires overlap."""


class GateShapeError(CircuitError):
    """A gate's target appears among its controls, or a control is repeated."""


class CompositionError(CircuitError):
    """Two circuits of different widths were composed."""


class LoweringError(CircuitError):
    """Base class for failures while lowering a gate to the elementary set.

    ``gate_index`` is filled in by :func:`revadd.decompose.lower_circuit` so
    callers can point at the offending gate.
    """

    def __init__(self, message: str, gate_index: int | None = None):
        super().__init__(message)
        self.gate_index = gate_index


class TooManyControls(LoweringError):
    pass


class NotEnoughBorrows(LoweringError):
    pass


class PolarityError(LoweringError):
    pass


class SpecError(CircuitError, ValueError):
    """Invalid size parameter for a synthesized circuit."""


class SimError(CircuitError):
    pass


class RangeError(CircuitError, ValueError):
    """An integer does not fit in its register."""


class TooWideError(CircuitError):
    pass


class DomainError(CircuitError, ValueError):
    pass


class NetlistError(CircuitError):
    """Malformed netlist text. ``line`` is the 1-based source line, if known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
