"""Line-oriented text format for circuits.

::

    revnet 1
    width 7
    label a 0..2
    label b 3..5
    label flag 6
    cx 0 3
    mcx +3 -4 +0 : 6

``#`` starts a comment. ``x``, ``cx`` and ``ccx`` take positive controls
followed by the target; ``mcx`` takes signed controls, a colon and the
target. Unknown directives are rejected.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from revadd.circuit import NEG, POS, Circuit, Gate, RegisterLayout, is_elementary
from revadd.errors import CircuitError, GateShapeError, LayoutError, NetlistError

FORMAT_VERSION = 1


@dataclass
class Netlist:
    circuit: Circuit
    # source line number of each gate, parallel to circuit.gates
    gate_lines: list[int] = field(default_factory=list)


def _range(wires: tuple[int, ...]) -> str:
    lo, hi = wires[0], wires[-1]
    if list(wires) != list(range(lo, hi + 1)):
        raise NetlistError(f"register wires {wires} are not a contiguous ascending range")
    return f"{lo}..{hi}"


def format_gate(g: Gate) -> str:
    if is_elementary(g):
        op = ("x", "cx", "ccx")[g.num_controls]
        return " ".join([op, *(str(w) for w, _ in g.controls), str(g.target)])
    ctl = " ".join(f"{p.value}{w}" for w, p in g.controls)
    return f"mcx {ctl} : {g.target}"


def serialize(circuit: Circuit) -> str:
    lines = [f"revnet {FORMAT_VERSION}", f"width {circuit.width}"]
    lay = circuit.layout
    if lay.a:
        lines.append(f"label a {_range(lay.a)}")
    if lay.b:
        lines.append(f"label b {_range(lay.b)}")
    if lay.flag is not None:
        lines.append(f"label flag {lay.flag}")
    lines.extend(format_gate(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def _int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise NetlistError(f"expected a wire index, got {tok!r}", lineno)
    return int(tok)


def _parse_range(tok: str, lineno: int) -> list[int]:
    lo, sep, hi = tok.partition("..")
    if not sep:
        raise NetlistError(f"expected <lo>..<hi>, got {tok!r}", lineno)
    lo_i, hi_i = _int(lo, lineno), _int(hi, lineno)
    if hi_i < lo_i:
        raise NetlistError(f"empty range {tok!r}", lineno)
    return list(range(lo_i, hi_i + 1))


def _parse_gate(op: str, args: list[str], lineno: int) -> Gate:
    arity = {"x": 1, "cx": 2, "ccx": 3}
    if op in arity:
        if len(args) != arity[op]:
            raise NetlistError(f"{op} takes {arity[op]} wires, got {len(args)}", lineno)
        wires = [_int(a, lineno) for a in args]
        return Gate(tuple((w, POS) for w in wires[:-1]), wires[-1])
    # mcx
    if len(args) < 2 or args[-2] != ":":
        raise NetlistError("mcx expects '<±w> ... : <target>'", lineno)
    controls = []
    for tok in args[:-2]:
        if not tok or tok[0] not in "+-":
            raise NetlistError(f"mcx control {tok!r} needs a + or - prefix", lineno)
        controls.append((_int(tok[1:], lineno), POS if tok[0] == "+" else NEG))
    return Gate(tuple(controls), _int(args[-1], lineno))


def parse(text: str) -> Netlist:
    width = None
    labels: dict[str, list[int]] = {}
    gates: list[Gate] = []
    gate_lines: list[int] = []
    seen_version = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        op, args = toks[0], toks[1:]
        if not seen_version:
            if op != "revnet" or args != [str(FORMAT_VERSION)]:
                raise NetlistError(f"expected 'revnet {FORMAT_VERSION}' header", lineno)
            seen_version = True
            continue
        if op == "width":
            if width is not None or gates or len(args) != 1:
                raise NetlistError("'width <N>' must appear once, before any gate", lineno)
            width = _int(args[0], lineno)
        elif op == "label":
            if gates:
                raise NetlistError("labels must precede gates", lineno)
            if len(args) != 2 or args[0] not in ("a", "b", "flag") or args[0] in labels:
                raise NetlistError(f"bad label directive {raw.strip()!r}", lineno)
            if args[0] == "flag":
                labels["flag"] = [_int(args[1], lineno)]
            else:
                labels[args[0]] = _parse_range(args[1], lineno)
        elif op in ("x", "cx", "ccx", "mcx"):
            if width is None:
                raise NetlistError("gate before 'width' directive", lineno)
            try:
                gates.append(_parse_gate(op, args, lineno))
            except (LayoutError, GateShapeError) as exc:
                raise NetlistError(str(exc), lineno) from exc
            gate_lines.append(lineno)
        else:
            raise NetlistError(f"unknown directive {op!r}", lineno)
    if not seen_version:
        raise NetlistError("empty netlist")
    if width is None:
        raise NetlistError("missing 'width' directive")
    try:
        layout = RegisterLayout(
            a=labels.get("a", ()), b=labels.get("b", ()),
            flag=labels["flag"][0] if "flag" in labels else None,
        )
        circuit = Circuit(width, gates, layout)
    except CircuitError as exc:
        raise NetlistError(str(exc)) from exc
    return Netlist(circuit, gate_lines)


def load(path: str | Path) -> Netlist:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(circuit: Circuit, path: str | Path) -> None:
    Path(path).write_text(serialize(circuit), encoding="utf-8")
