"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or range error,
3 lowering error, 4 missing or unsuitable register layout.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from revadd import cost, netlist
from revadd.circuit import Circuit
from revadd.decompose import lower_circuit
from revadd.errors import LoweringError, NetlistError, RangeError, TooWideError
from revadd.simulate import (
    Exhaustive, Random, pack_registers, register_reference, run, unpack_registers,
    verify_equivalence,
)
from revadd.synth import synth_adder, synth_controlled_increment, synth_increment

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LOWER, EXIT_LAYOUT = 0, 1, 2, 3, 4

SYNTH = {"inc": synth_increment, "cinc": synth_controlled_increment, "add": synth_adder}


class CliExit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"size must be >= 1, got {value}")
    return value


def _read(path: str) -> netlist.Netlist:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return netlist.parse(text)
    except (OSError, NetlistError) as exc:
        raise CliExit(EXIT_USAGE, f"{path}: {exc}")


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _kind_of(circuit: Circuit) -> tuple[str, int] | None:
    """Recognise which synthesized family a layout belongs to."""
    lay = circuit.layout
    if lay.flag is None or not lay.b:
        return None
    if lay.is_adder:
        return "add", len(lay.b)
    if len(lay.a) == 1:
        return "cinc", len(lay.b)
    if not lay.a:
        return "inc", len(lay.b)
    return None


def cmd_synth(args) -> int:
    _write(netlist.serialize(SYNTH[args.kind](args.size)), args.out)
    return EXIT_OK


def cmd_lower(args) -> int:
    src = _read(args.input)
    try:
        lowered = lower_circuit(src.circuit)
    except LoweringError as exc:
        line = src.gate_lines[exc.gate_index] if exc.gate_index is not None else "?"
        raise CliExit(EXIT_LOWER, f"{args.input}:{line}: {exc}")
    _write(netlist.serialize(lowered), args.out)
    print(f"elementary gates: {len(lowered)}", file=sys.stderr)
    return EXIT_OK


def cmd_sim(args) -> int:
    circuit = _read(args.input).circuit
    lay = circuit.layout
    if not lay.is_adder:
        raise CliExit(EXIT_LAYOUT, "sim needs a netlist with a, b and flag labels of equal size")
    try:
        state = pack_registers(lay, args.a, args.b, 1)
    except RangeError as exc:
        raise CliExit(EXIT_USAGE, str(exc))
    a, b, flag = unpack_registers(lay, run(circuit, state))
    print(f"a={a} b={b} flag={flag}")
    return EXIT_OK


def cmd_verify(args) -> int:
    circuit = _read(args.input).circuit
    if _kind_of(circuit) is None:
        raise CliExit(EXIT_LAYOUT, "no arithmetic reference for this netlist's labels")
    mode = Exhaustive() if args.exhaustive else Random(args.random, args.seed)
    try:
        report = verify_equivalence(
            circuit, register_reference(circuit.layout), mode, {circuit.layout.flag: 1}
        )
    except TooWideError as exc:
        raise CliExit(EXIT_USAGE, f"{exc}; use --random")
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_cost(args) -> int:
    if args.netlist:
        circuit = _read(args.netlist).circuit
        kind = _kind_of(circuit)
    elif args.kind and args.size:
        circuit = SYNTH[args.kind](args.size)
        kind = (args.kind, args.size)
    else:
        raise CliExit(EXIT_USAGE, "cost needs KIND SIZE or --netlist FILE")

    formula = context = None
    if kind and kind[0] == "cinc":
        formula = cost.formula_cinc_depth(kind[1])
        context = max(circuit.width, 2 * kind[1] + 1)
    elif kind and kind[0] == "add":
        formula = cost.summed_adder_depth(kind[1])
    try:
        report = cost.compare(circuit, formula, context_width=context)
    except LoweringError as exc:
        raise CliExit(EXIT_LOWER, str(exc))

    label = f"{kind[0]} {kind[1]}" if kind else "netlist"
    print(f"# sequential depth of {label} ({len(circuit)} gates, width {circuit.width})")
    for line in report.lines():
        print(line)
    if kind and kind[0] == "add":
        print(f"ratio={report.measured / (2 * kind[1] ** 3 / 3):.6f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revadd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synth", help="write the netlist of a synthesized circuit")
    s.add_argument("kind", choices=sorted(SYNTH))
    s.add_argument("size", type=_positive)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("lower", help="rewrite a netlist into NOT/CNOT/Toffoli")
    s.add_argument("input", help="netlist path, or - for stdin")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_lower)

    s = sub.add_parser("sim", help="simulate an adder netlist on one input")
    s.add_argument("input")
    s.add_argument("-a", type=int, required=True)
    s.add_argument("-b", type=int, required=True)
    s.set_defaults(func=cmd_sim)

    s = sub.add_parser("verify", help="check a netlist against integer arithmetic")
    s.add_argument("input")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--random", type=_positive, metavar="COUNT")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cost", help="sequential depth against the closed-form formulas")
    s.add_argument("kind", nargs="?", choices=sorted(SYNTH))
    s.add_argument("size", nargs="?", type=_positive)
    s.add_argument("--netlist", metavar="FILE")
    s.set_defaults(func=cmd_cost)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliExit as exc:
        print(f"revadd: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
