"""Lowering of mixed-polarity multi-controlled NOTs to {NOT, CNOT, Toffoli}.

Negative controls are conjugated with NOT gates. Gates with three or more
controls are then rewritten as a Toffoli ladder that borrows ``k - 2``
other circuit wires. Borrowed wires may hold any value on entry and are
returned to that value, so no clean ancilla is needed.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from revadd.circuit import POS, Circuit, Gate, ccx, x
from revadd.errors import LoweringError, NotEnoughBorrows, PolarityError, TooManyControls


class BorrowStrategy(enum.Enum):
    LOWEST_FREE_INDEX = "lowest-free-index"


@dataclass(frozen=True)
class BorrowPolicy:
    strategy: BorrowStrategy = BorrowStrategy.LOWEST_FREE_INDEX

    def select(self, gate: Gate, width: int, count: int) -> list[int]:
        busy = set(gate.wires)
        free = [w for w in range(width) if w not in busy]
        if len(free) < count:
            raise NotEnoughBorrows(
                f"{gate!r} needs {count} borrowed wires, only {len(free)} free in width {width}"
            )
        return free[:count]


DEFAULT_POLICY = BorrowPolicy()


def conjugate_negative_controls(gate: Gate) -> list[Gate]:
    negs = [w for w, p in gate.controls if p is not POS]
    if not negs:
        return [gate]
    flips = [x(w) for w in negs]
    positive = Gate(tuple((w, POS) for w, _ in gate.controls), gate.target)
    return flips + [positive] + flips


def max_controls(width: int) -> int:
    """Largest control count the ladder accepts in a circuit of ``width`` wires."""
    return math.ceil(width / 2)


def barenco_lower(gate: Gate, width: int, policy: BorrowPolicy = DEFAULT_POLICY) -> list[Gate]:
    """Rewrite an all-positive gate with k >= 3 controls as 4k - 8 Toffolis.

    The ladder chains controls ``c_3 .. c_k`` through borrowed wires
    ``w_1 .. w_{k-2}``; the apex Toffoli on ``c_1, c_2`` writes ``w_1``.
    The first V-shaped sweep toggles the target by the product of all
    controls (plus junk from the borrowed wires, which cancels because the
    target is hit twice); the second sweep, without the target gates,
    restores the borrowed wires.
    """
    k = gate.num_controls
    if gate.neg_mask:
        raise PolarityError(f"{gate!r} has negative controls; conjugate them first")
    if k < 3:
        raise LoweringError(f"ladder lowering needs at least 3 controls, got {k}")
    if width < 5 or k > max_controls(width):
        raise TooManyControls(
            f"{gate!r}: {k} controls exceed ceil({width}/2) = {max_controls(width)}"
        )
    c = [w for w, _ in gate.controls]
    borrowed = policy.select(gate, width, k - 2)

    # rungs[j] writes borrowed[j] (j >= 1) from control c[j + 1] and borrowed[j - 1]
    rungs = [ccx(c[j + 1], borrowed[j - 1], borrowed[j]) for j in range(1, k - 2)]
    apex = ccx(c[0], c[1], borrowed[0])
    inner = rungs[::-1] + [apex] + rungs
    top = ccx(c[k - 1], borrowed[k - 3], gate.target)
    return [top] + inner + [top] + inner


def lower_gate(gate: Gate, width: int, policy: BorrowPolicy = DEFAULT_POLICY) -> list[Gate]:
    """Elementary gate list with the same action as ``gate`` on every basis state."""
    if gate.num_controls < 3:
        return conjugate_negative_controls(gate)
    out: list[Gate] = []
    for g in conjugate_negative_controls(gate):
        if g.num_controls >= 3:
            out.extend(barenco_lower(g, width, policy))
        else:
            out.append(g)
    return out


def lower_circuit(circuit: Circuit, policy: BorrowPolicy = DEFAULT_POLICY) -> Circuit:
    gates: list[Gate] = []
    for i, g in enumerate(circuit.gates):
        try:
            gates.extend(lower_gate(g, circuit.width, policy))
        except LoweringError as exc:
            exc.gate_index = i
            exc.args = (f"gate {i}: {exc.args[0]}",)
            raise
    return Circuit(circuit.width, gates, circuit.layout)
