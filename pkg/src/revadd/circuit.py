"""Gate IR and circuit container.

A gate is a NOT on one target wire, conditioned on a set of control wires
each matching a polarity. NOT, CNOT and Toffoli are the 0, 1 and 2
positive-control cases. Circuits are immutable; every structural operation
returns a new value.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from revadd.errors import CompositionError, GateShapeError, LayoutError


class Polarity(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @property
    def fires_on(self) -> int:
        return 1 if self is Polarity.POSITIVE else 0


POS = Polarity.POSITIVE
NEG = Polarity.NEGATIVE

Control = tuple[int, Polarity]
ControlSpec = Union[int, Control]


@dataclass(frozen=True, eq=False)
class Gate:
    """Mixed-polarity multi-controlled NOT.

    Equality and hashing ignore the order of ``controls``.
    """

    controls: tuple[Control, ...]
    target: int
    # bitmasks over wire indices, derived in __post_init__
    pos_mask: int = field(init=False, repr=False)
    neg_mask: int = field(init=False, repr=False)
    _max_wire: int = field(init=False, repr=False)

    def __post_init__(self):
        controls = tuple(
            (w, p) if type(p) is Polarity and type(w) is int else (int(w), Polarity(p))
            for w, p in self.controls
        )
        object.__setattr__(self, "controls", controls)
        if self.target < 0 or any(w < 0 for w, _ in controls):
            raise LayoutError(f"negative wire index in {self}")
        wires = [w for w, _ in controls]
        if self.target in wires:
            raise GateShapeError(f"target wire {self.target} is also a control")
        if len(set(wires)) != len(wires):
            raise GateShapeError(f"repeated control wire in {wires}")
        pos = neg = 0
        for w, p in controls:
            if p is POS:
                pos |= 1 << w
            else:
                neg |= 1 << w
        object.__setattr__(self, "pos_mask", pos)
        object.__setattr__(self, "neg_mask", neg)
        object.__setattr__(self, "_max_wire", max(wires + [self.target]))

    def __eq__(self, other):
        if not isinstance(other, Gate):
            return NotImplemented
        return (
            self.target == other.target
            and self.pos_mask == other.pos_mask
            and self.neg_mask == other.neg_mask
        )

    def __hash__(self):
        return hash((self.target, self.pos_mask, self.neg_mask))

    def __repr__(self):
        ctl = " ".join(f"{p.value}{w}" for w, p in self.controls)
        return f"Gate({ctl} : {self.target})" if ctl else f"Gate(: {self.target})"

    @property
    def num_controls(self) -> int:
        return len(self.controls)

    @property
    def num_negative(self) -> int:
        return sum(1 for _, p in self.controls if p is NEG)

    @property
    def wires(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.controls) + (self.target,)

    def max_wire(self) -> int:
        return self._max_wire


def _control(spec: ControlSpec) -> Control:
    if isinstance(spec, tuple):
        return (spec[0], Polarity(spec[1]))
    return (spec, POS)


def mcx(controls: Iterable[ControlSpec], target: int) -> Gate:
    """Build a gate; bare ints in ``controls`` are positive controls."""
    return Gate(tuple(_control(c) for c in controls), target)


def x(target: int) -> Gate:
    return Gate((), target)


def cx(control: int, target: int) -> Gate:
    return Gate(((control, POS),), target)


def ccx(c1: int, c2: int, target: int) -> Gate:
    return Gate(((c1, POS), (c2, POS)), target)


def is_elementary(gate: Gate) -> bool:
    """True for NOT, CNOT and Toffoli: at most two controls, all positive."""
    return gate.num_controls <= 2 and gate.neg_mask == 0


@dataclass(frozen=True)
class RegisterLayout:
    """Named registers over circuit wires, least significant bit first."""

    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()
    flag: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        wires = self.wires()
        if len(set(wires)) != len(wires):
            raise LayoutError(f"register wires overlap: {wires}")
        if any(w < 0 for w in wires):
            raise LayoutError(f"negative wire index in layout: {wires}")

    def wires(self) -> tuple[int, ...]:
        extra = () if self.flag is None else (self.flag,)
        return self.a + self.b + extra

    @property
    def is_adder(self) -> bool:
        return len(self.a) == len(self.b) > 0 and self.flag is not None


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: tuple[Gate, ...] = ()
    layout: RegisterLayout = RegisterLayout()

    def __post_init__(self):
        if self.width < 1:
            raise LayoutError(f"circuit width must be positive, got {self.width}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for w in self.layout.wires():
            if w >= self.width:
                raise LayoutError(f"layout wire {w} outside width {self.width}")
        for i, g in enumerate(self.gates):
            if g.max_wire() >= self.width:
                raise LayoutError(f"gate {i} ({g!r}) touches a wire outside width {self.width}")

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)


def make_circuit(width: int, layout: RegisterLayout | None = None) -> Circuit:
    return Circuit(width, (), layout or RegisterLayout())


def append(circuit: Circuit, gate: Gate) -> Circuit:
    return extend(circuit, (gate,))


def extend(circuit: Circuit, gates: Iterable[Gate]) -> Circuit:
    return Circuit(circuit.width, circuit.gates + tuple(gates), circuit.layout)


def invert(circuit: Circuit) -> Circuit:
    """Reverse the gate order. Every gate is self-inverse, so this is the inverse circuit."""
    return Circuit(circuit.width, circuit.gates[::-1], circuit.layout)


def compose(first: Circuit, second: Circuit) -> Circuit:
    """Run ``first`` then ``second``; the result keeps ``first``'s layout."""
    if first.width != second.width:
        raise CompositionError(f"cannot compose widths {first.width} and {second.width}")
    return Circuit(first.width, first.gates + second.gates, first.layout)


def widen(circuit: Circuit, width: int) -> Circuit:
    """Embed ``circuit`` in a wider one by adding idle wires above the existing ones."""
    if width < circuit.width:
        raise LayoutError(f"cannot narrow width {circuit.width} to {width}")
    return Circuit(width, circuit.gates, circuit.layout)


def remap_gate(gate: Gate, mapping: Mapping[int, int] | Sequence[int]) -> Gate:
    return Gate(tuple((mapping[w], p) for w, p in gate.controls), mapping[gate.target])


def remap(gates: Iterable[Gate], mapping: Mapping[int, int] | Sequence[int]) -> list[Gate]:
    """Relabel wires: local wire ``i`` becomes ``mapping[i]``."""
    return [remap_gate(g, mapping) for g in gates]
