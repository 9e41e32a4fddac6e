"""Sequential depth accounting over multi-controlled NOT gates.

Depth here is a per-gate cost summed along the gate list, not a parallel
layer count: an elementary gate costs 1, a gate with ``k >= 3`` positive
controls costs the ``4k - 8`` Toffolis of its ladder lowering, and any
negative controls add a flat 2 for the NOT conjugation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from revadd.circuit import Circuit, Gate, widen
from revadd.decompose import DEFAULT_POLICY, BorrowPolicy, lower_circuit
from revadd.errors import DomainError


@dataclass(frozen=True)
class DepthModel:
    negative_surcharge: int = 2

    def depth(self, k: int, has_negative: bool) -> int:
        base = 1 if k <= 2 else 4 * k - 8
        return base + (self.negative_surcharge if has_negative and k > 0 else 0)


DEFAULT_MODEL = DepthModel()


def gate_depth(gate: Gate, model: DepthModel = DEFAULT_MODEL) -> int:
    return model.depth(gate.num_controls, gate.neg_mask != 0)


def circuit_depth(circuit: Circuit, model: DepthModel = DEFAULT_MODEL) -> int:
    return sum(gate_depth(g, model) for g in circuit.gates)


def formula_cinc_depth(k: int) -> int:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k == 1:
        return 1
    if k == 2:
        return 10
    return 2 * k * k + k - 5


def formula_adder_depth(n: int) -> int:
    """Closed form of the summed controlled-increment depths, valid for ``n >= 3``."""
    if n < 3:
        raise DomainError(f"closed form holds for n >= 3, got {n}; use summed_adder_depth")
    value = Fraction(2, 3) * n**3 + Fraction(3, 2) * n**2 - Fraction(25, 6) * n + 8
    if value.denominator != 1:
        raise AssertionError(f"closed form is not integral at n={n}: {value}")
    return int(value)


def summed_adder_depth(n: int) -> int:
    return sum(formula_cinc_depth(k) for k in range(1, n + 1))


@dataclass
class CostReport:
    per_gate: list[int] = field(repr=False)
    measured: int
    formula: int | None
    elementary: int | None

    @property
    def delta(self) -> int | None:
        return None if self.formula is None else self.measured - self.formula

    def lines(self) -> list[str]:
        def fmt(v):
            return "n/a" if v is None else str(v)
        return [
            f"measured={self.measured}",
            f"formula={fmt(self.formula)}",
            f"delta={fmt(self.delta)}",
            f"elementary={fmt(self.elementary)}",
        ]


def compare(
    circuit: Circuit,
    formula_value: int | None,
    model: DepthModel = DEFAULT_MODEL,
    context_width: int | None = None,
    policy: BorrowPolicy = DEFAULT_POLICY,
) -> CostReport:
    """Measure ``circuit`` under ``model`` and set it against ``formula_value``.

    The elementary count comes from actually lowering the circuit. A
    controlled incrementer on its own has too few wires for its widest
    gates to borrow from; ``context_width`` lowers it as if embedded in a
    wider circuit (``2k + 1`` wires mirrors its place inside the adder).
    """
    per_gate = [gate_depth(g, model) for g in circuit.gates]
    target = circuit if context_width is None else widen(circuit, context_width)
    elementary = len(lower_circuit(target, policy))
    return CostReport(per_gate, sum(per_gate), formula_value, elementary)
