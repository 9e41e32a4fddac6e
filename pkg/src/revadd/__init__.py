"""One-ancilla reversible incrementer and in-place adder over NOT/CNOT/Toffoli."""
from revadd.circuit import (
    NEG, POS, Circuit, Gate, Polarity, RegisterLayout, append, ccx, compose, cx,
    extend, invert, is_elementary, make_circuit, mcx, widen, x,
)
from revadd.cost import (
    DEFAULT_MODEL, CostReport, DepthModel, circuit_depth, compare, formula_adder_depth,
    formula_cinc_depth, gate_depth, summed_adder_depth,
)
from revadd.decompose import (
    BorrowPolicy, barenco_lower, conjugate_negative_controls, lower_circuit, lower_gate,
)
from revadd.errors import *  # noqa: F401,F403
from revadd.simulate import (
    Exhaustive, Random, TruthTable, VerificationReport, apply_gate, oracle_add, oracle_mcx,
    pack_registers, register_reference, run, run_many, truth_table, unpack_registers,
    verify_equivalence,
)
from revadd.synth import (
    AdderSpec, synth_adder, synth_controlled_increment, synth_increment, with_control,
)

__version__ = "0.1.0"
