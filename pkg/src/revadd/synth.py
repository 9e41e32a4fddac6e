"""Incrementer and in-place adder circuits using a single ancilla.

The ancilla ("flag") enters as 1 and leaves as 1. Inside the incrementer it
is 1 exactly while the carry is still propagating: each bit is flipped
under the flag, and the flag drops the first time a bit goes from 0 to 1.
A final block restores the flag from the low bits of the result.
"""
from __future__ import annotations

from dataclasses import dataclass

from revadd.circuit import NEG, POS, Circuit, Gate, RegisterLayout, cx, remap, x
from revadd.errors import GateShapeError, LayoutError, SpecError


@dataclass(frozen=True)
class AdderSpec:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise SpecError(f"adder width must be a positive integer, got {self.n!r}")

    @property
    def width(self) -> int:
        return 2 * self.n + 1


def _check_size(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise SpecError(f"register size must be a positive integer, got {k!r}")


def increment_gates(b: list[int], flag: int) -> list[Gate]:
    """Gate list for ``b -> b + 1 mod 2**len(b)`` with ``flag`` = 1 on entry and exit."""
    k = len(b)
    if k == 1:
        return [x(b[0])]
    gates: list[Gate] = []
    for i in range(k - 1):
        gates.append(cx(flag, b[i]))
        # bit i just went 0 -> 1 while all lower bits wrapped to 0: stop the carry
        lower = [(b[j], NEG) for j in range(i - 1, -1, -1)]
        gates.append(Gate(((b[i], POS), *lower), flag))
    gates.append(cx(flag, b[k - 1]))
    # flag is 0 unless the low k-1 bits all wrapped to 0
    gates.append(x(flag))
    gates.append(Gate(tuple((b[j], NEG) for j in range(k - 1)), flag))
    return gates


def synth_increment(k: int) -> Circuit:
    """``k``-bit incrementer on wires ``b_0..b_{k-1}`` (LSB first) plus the flag on wire ``k``."""
    _check_size(k)
    b = list(range(k))
    return Circuit(k + 1, increment_gates(b, k), RegisterLayout(b=b, flag=k))


def with_control(circuit: Circuit, control_wire: int) -> Circuit:
    """Add a positive control on ``control_wire`` to every gate."""
    if control_wire >= circuit.width or control_wire < 0:
        raise LayoutError(f"control wire {control_wire} outside width {circuit.width}")
    gates = []
    for g in circuit.gates:
        if control_wire in g.wires:
            raise GateShapeError(f"control wire {control_wire} already used by {g!r}")
        gates.append(Gate(g.controls + ((control_wire, POS),), g.target))
    return Circuit(circuit.width, gates, circuit.layout)


def controlled_increment_gates(a: int, b: list[int], flag: int) -> list[Gate]:
    if len(b) == 1:
        return [cx(a, b[0])]
    return [Gate(g.controls + ((a, POS),), g.target) for g in increment_gates(b, flag)]


def synth_controlled_increment(k: int) -> Circuit:
    """Increment ``b`` when the control wire is 1.

    Wire 0 is the control, wires ``1..k`` hold ``b`` (LSB first) and wire
    ``k + 1`` is the flag. For ``k == 1`` this is a single CNOT.
    """
    _check_size(k)
    b = list(range(1, k + 1))
    layout = RegisterLayout(a=(0,), b=b, flag=k + 1)
    if k == 1:
        return Circuit(k + 2, [cx(0, 1)], layout)
    inc = synth_increment(k)
    # shift the incrementer up one wire to make room for the control on wire 0
    shifted = Circuit(k + 2, remap(inc.gates, list(range(1, k + 2))), layout)
    return with_control(shifted, 0)


def adder_layout(n: int) -> RegisterLayout:
    return RegisterLayout(a=range(n), b=range(n, 2 * n), flag=2 * n)


def synth_adder(spec: AdderSpec | int) -> Circuit:
    """In-place ``(a, b, 1) -> (a, a + b mod 2**n, 1)`` on ``2n + 1`` wires.

    Bit ``a_j`` (weight ``2**j``) drives an increment of the ``n - j`` most
    significant bits of ``b``, which adds ``2**j`` modulo ``2**n``. The
    increments are emitted from the widest (``a_0``) to the narrowest.
    """
    if isinstance(spec, int):
        spec = AdderSpec(spec)
    n = spec.n
    layout = adder_layout(n)
    gates: list[Gate] = []
    for k in range(n, 0, -1):
        j = n - k
        gates.extend(controlled_increment_gates(layout.a[j], list(layout.b[j:]), layout.flag))
    return Circuit(spec.width, gates, layout)
