"""Classical basis-state simulation of reversible circuits.

A basis state is a plain ``int`` whose bit ``i`` is the value of wire ``i``.
For bulk work the simulator uses a bit-sliced layout instead: a boolean
array of shape ``(width, m)`` holding ``m`` states, one row per wire. A gate
then costs one vectorised AND per control, which keeps exhaustive scans of
2**17 states and random scans of 129-wire circuits fast.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import numpy as np

from revadd.circuit import Circuit, Gate, RegisterLayout
from revadd.errors import RangeError, SimError, TooWideError

DEFAULT_WIDTH_LIMIT = 22
_CHUNK = 1 << 16


def apply_gate(gate: Gate, state: int) -> int:
    if state & gate.pos_mask == gate.pos_mask and not state & gate.neg_mask:
        return state ^ (1 << gate.target)
    return state


def run(circuit: Circuit, state: int) -> int:
    if state < 0 or state >> circuit.width:
        raise SimError(f"state {state:#x} does not fit in {circuit.width} wires")
    for g in circuit.gates:
        if state & g.pos_mask == g.pos_mask and not state & g.neg_mask:
            state ^= 1 << g.target
    return state


def oracle_mcx(gate: Gate, state: int) -> int:
    """Reference semantics of a gate, evaluated control by control.

    Deliberately avoids the precomputed masks that :func:`apply_gate` uses.
    """
    fires = all((state >> w) & 1 == p.fires_on for w, p in gate.controls)
    return state ^ (1 << gate.target) if fires else state


# --- bit-sliced engine -------------------------------------------------------

def run_rows(circuit: Circuit, rows: np.ndarray) -> np.ndarray:
    """Run ``circuit`` on a ``(width, m)`` boolean array of states; returns a new array."""
    if rows.shape[0] != circuit.width:
        raise SimError(f"expected {circuit.width} wire rows, got {rows.shape[0]}")
    rows = np.array(rows, dtype=bool, copy=True)
    scratch = np.empty(rows.shape[1], dtype=bool)
    for g in circuit.gates:
        if not g.controls:
            np.logical_not(rows[g.target], out=rows[g.target])
            continue
        first = True
        for w, p in g.controls:
            src = rows[w] if p.fires_on else ~rows[w]
            if first:
                scratch[:] = src
                first = False
            else:
                scratch &= src
        rows[g.target] ^= scratch
    return rows


def ints_to_rows(states: Iterable[int], width: int) -> np.ndarray:
    states = list(states)
    if width <= 63:
        arr = np.asarray(states, dtype=np.uint64)
        shifts = np.arange(width, dtype=np.uint64)[:, None]
        return ((arr[None, :] >> shifts) & np.uint64(1)).astype(bool)
    nbytes = (width + 7) // 8
    buf = b"".join(s.to_bytes(nbytes, "little") for s in states)
    raw = np.frombuffer(buf, dtype=np.uint8).reshape(len(states), nbytes)
    bits = np.unpackbits(raw, axis=1, bitorder="little")[:, :width]
    return bits.T.astype(bool)


def rows_to_ints(rows: np.ndarray) -> list[int]:
    width = rows.shape[0]
    if width <= 63:
        weights = np.left_shift(np.uint64(1), np.arange(width, dtype=np.uint64))
        return (rows.astype(np.uint64) * weights[:, None]).sum(axis=0, dtype=np.uint64).tolist()
    packed = np.packbits(rows, axis=0, bitorder="little").T.copy()
    return [int.from_bytes(col.tobytes(), "little") for col in packed]


def run_many(circuit: Circuit, states: Iterable[int]) -> list[int]:
    return rows_to_ints(run_rows(circuit, ints_to_rows(states, circuit.width)))


def enumerate_rows(width: int, start: int, stop: int,
                   fixed: Mapping[int, int] | None = None) -> np.ndarray:
    """Rows for input indices ``start..stop``; index bits fill the non-fixed wires in order."""
    fixed = dict(fixed or {})
    idx = np.arange(start, stop, dtype=np.uint64)
    rows = np.empty((width, stop - start), dtype=bool)
    bit = 0
    for w in range(width):
        if w in fixed:
            rows[w] = bool(fixed[w])
        else:
            rows[w] = (idx >> np.uint64(bit)) & np.uint64(1)
            bit += 1
    return rows


# --- registers and oracles ---------------------------------------------------

def _pack_bits(wires: tuple[int, ...], value: int) -> int:
    if value < 0 or value >> len(wires):
        raise RangeError(f"value {value} does not fit in {len(wires)} bits")
    out = 0
    for i, w in enumerate(wires):
        out |= ((value >> i) & 1) << w
    return out


def _unpack_bits(wires: tuple[int, ...], state: int) -> int:
    return sum(((state >> w) & 1) << i for i, w in enumerate(wires))


def pack_registers(layout: RegisterLayout, a: int, b: int, flag: int = 1) -> int:
    state = _pack_bits(layout.a, a) | _pack_bits(layout.b, b)
    if layout.flag is not None:
        if flag not in (0, 1):
            raise RangeError(f"flag must be 0 or 1, got {flag}")
        state |= flag << layout.flag
    return state


def unpack_registers(layout: RegisterLayout, state: int) -> tuple[int, int, int | None]:
    flag = None if layout.flag is None else (state >> layout.flag) & 1
    return _unpack_bits(layout.a, state), _unpack_bits(layout.b, state), flag


def oracle_add(n: int, a: int, b: int) -> int:
    for v in (a, b):
        if v < 0 or v >= 1 << n:
            raise RangeError(f"{v} is not an {n}-bit value")
    return (a + b) % (1 << n)


def register_reference(layout: RegisterLayout) -> Callable[[int], int]:
    """Integer-arithmetic reference for a layout's registers.

    With an a-register of the same size as b this is in-place addition;
    with a single a-wire it is a controlled increment; with no a-register a
    plain increment. Other wires pass through unchanged.
    """
    n = len(layout.b)
    if not n:
        raise SimError("layout has no b register")
    mask = (1 << n) - 1
    if len(layout.a) == n:
        addend = lambda a: a  # noqa: E731
    elif len(layout.a) <= 1:
        addend = lambda a: 1 if not layout.a else a  # noqa: E731
    else:
        raise SimError(f"no arithmetic reference for |a|={len(layout.a)}, |b|={n}")
    b_bits = _pack_bits(layout.b, mask)

    def reference(state: int) -> int:
        a, b, _ = unpack_registers(layout, state)
        b = (b + addend(a)) & mask
        return (state & ~b_bits) | _pack_bits(layout.b, b)

    return reference


# --- truth tables and verification ------------------------------------------

@dataclass(frozen=True)
class TruthTable:
    width: int
    mapping: np.ndarray = field(repr=False)

    @property
    def is_bijection(self) -> bool:
        seen = np.zeros(1 << self.width, dtype=bool)
        seen[self.mapping] = True
        return bool(seen.all())

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.width == other.width and np.array_equal(self.mapping, other.mapping)

    def __hash__(self):
        return hash((self.width, self.mapping.tobytes()))


def truth_table(circuit: Circuit, limit: int = DEFAULT_WIDTH_LIMIT) -> TruthTable:
    if circuit.width > limit:
        raise TooWideError(f"width {circuit.width} exceeds the exhaustive limit {limit}")
    total = 1 << circuit.width
    parts = []
    for start in range(0, total, _CHUNK):
        rows = enumerate_rows(circuit.width, start, min(total, start + _CHUNK))
        parts.append(np.asarray(rows_to_ints(run_rows(circuit, rows)), dtype=np.uint64))
    return TruthTable(circuit.width, np.concatenate(parts).astype(np.int64))


@dataclass(frozen=True)
class Exhaustive:
    limit: int = DEFAULT_WIDTH_LIMIT


@dataclass(frozen=True)
class Random:
    count: int
    seed: int = 0


@dataclass(frozen=True)
class Counterexample:
    index: int
    input: int
    expected: int
    actual: int


@dataclass
class VerificationReport:
    passed: bool
    checked: int
    mode: str
    seed: int | None = None
    counterexample: Counterexample | None = None

    def summary(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} mode={self.mode} checked={self.checked}"
        if self.seed is not None:
            head += f" seed={self.seed}"
        if self.counterexample:
            ce = self.counterexample
            head += (f"\ncounterexample index={ce.index} input={ce.input:#x} "
                     f"expected={ce.expected:#x} actual={ce.actual:#x}")
        return head


def _batches(circuit: Circuit, mode, fixed: Mapping[int, int]):
    free = circuit.width - len(fixed)
    if isinstance(mode, Exhaustive):
        if free > mode.limit:
            raise TooWideError(f"{free} free wires exceed the exhaustive limit {mode.limit}")
        total = 1 << free
        for start in range(0, total, _CHUNK):
            yield enumerate_rows(circuit.width, start, min(total, start + _CHUNK), fixed)
    elif isinstance(mode, Random):
        rng = np.random.default_rng(mode.seed)
        left = mode.count
        while left > 0:
            m = min(left, _CHUNK)
            rows = rng.integers(0, 2, size=(circuit.width, m)).astype(bool)
            for w, v in fixed.items():
                rows[w] = bool(v)
            yield rows
            left -= m
    else:
        raise TypeError(f"unknown verification mode {mode!r}")


def verify_equivalence(
    circuit: Circuit,
    reference: Callable[[int], int],
    mode: Exhaustive | Random = Exhaustive(),
    fixed: Mapping[int, int] | None = None,
) -> VerificationReport:
    """Compare ``circuit`` with ``reference`` on a set of basis states.

    ``fixed`` pins wires to constant values (e.g. ``{flag: 1}``) so that only
    the contractual slice of the input space is checked. The counterexample,
    if any, is the first failing state in enumeration (or sampling) order.
    """
    fixed = dict(fixed or {})
    checked = 0
    for rows in _batches(circuit, mode, fixed):
        inputs = rows_to_ints(rows)
        outputs = rows_to_ints(run_rows(circuit, rows))
        for i, (s, out) in enumerate(zip(inputs, outputs)):
            want = reference(s)
            if want != out:
                return VerificationReport(
                    False, checked + i + 1, _mode_name(mode), getattr(mode, "seed", None),
                    Counterexample(checked + i, s, want, out),
                )
        checked += len(inputs)
    return VerificationReport(True, checked, _mode_name(mode), getattr(mode, "seed", None))


def _mode_name(mode) -> str:
    return "exhaustive" if isinstance(mode, Exhaustive) else "random"
