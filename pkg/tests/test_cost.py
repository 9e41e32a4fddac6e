from fractions import Fraction

import pytest

from revadd.circuit import NEG, Circuit, ccx, compose, cx, make_circuit, mcx, x
from revadd.cost import (
    DepthModel, circuit_depth, compare, formula_adder_depth, formula_cinc_depth, gate_depth,
    summed_adder_depth,
)
from revadd.decompose import lower_gate
from revadd.errors import DomainError
from revadd.synth import synth_adder, synth_controlled_increment

from conftest import random_circuit


@pytest.mark.parametrize("gate, depth", [
    (x(0), 1), (cx(0, 1), 1), (ccx(0, 1, 2), 1),
    (mcx([(0, NEG)], 1), 3),
    (mcx([0, (1, NEG)], 2), 3),
    (mcx(range(5), 5), 12),
    (mcx([0, 1, 2, (3, NEG)], 4), 10),
    (mcx([(w, NEG) for w in range(5)], 5), 14),
])
def test_gate_depth_table(gate, depth):
    assert gate_depth(gate) == depth


def test_depth_model_monotone_and_positive():
    m = DepthModel()
    for neg in (False, True):
        vals = [m.depth(k, neg) for k in range(3, 30)]
        assert vals == sorted(vals) and min(vals) > 0


@pytest.mark.parametrize("k", range(3, 12))
@pytest.mark.parametrize("j", range(0, 4))
def test_depth_vs_literal_lowering(k, j):
    g = mcx([(w, NEG) if w < j else w for w in range(k)], k)
    literal = len(lower_gate(g, 2 * k + 1))
    assert literal == 4 * k - 8 + 2 * j
    if j == 0:
        assert gate_depth(g) == literal
    else:
        assert gate_depth(g) == 4 * k - 6 <= literal
        assert (gate_depth(g) == literal) == (j == 1)


def test_circuit_depth_empty():
    assert circuit_depth(make_circuit(3)) == 0


def test_circuit_depth_additive():
    c1, c2 = random_circuit(7, 15, 1, max_controls=4), random_circuit(7, 15, 2, max_controls=4)
    assert circuit_depth(compose(c1, c2)) == circuit_depth(c1) + circuit_depth(c2)


@pytest.mark.parametrize("k, want", [(1, 1), (2, 10), (3, 16), (4, 31)])
def test_formula_cinc(k, want):
    assert formula_cinc_depth(k) == want


def test_formula_adder_values():
    assert formula_adder_depth(3) == 27 == 1 + 10 + 16
    assert formula_adder_depth(4) == 58


def test_formula_adder_domain():
    with pytest.raises(DomainError):
        formula_adder_depth(2)


def test_closed_form_equals_sum():
    for n in range(3, 101):
        exact = Fraction(2 * n**3, 3) + Fraction(3 * n**2, 2) - Fraction(25 * n, 6) + 8
        assert exact == summed_adder_depth(n) == formula_adder_depth(n)


def test_measured_cinc_small():
    assert circuit_depth(synth_controlled_increment(1)) == 1
    # k=2: two Toffolis, one flag Toffoli, one CNOT, one mixed 2-control gate (3)
    assert circuit_depth(synth_controlled_increment(2)) == 7


@pytest.mark.parametrize("k", range(3, 51))
def test_measured_cinc_polynomial(k):
    # k Toffoli flips, 1 + sum_{i=1}^{k-2}(4i+2) for the flag updates,
    # 1 for the controlled flag NOT, 4k-6 for the restore gate
    assert circuit_depth(synth_controlled_increment(k)) == 2 * k * k + k - 4


def test_compare_cinc1_zero_delta():
    rep = compare(synth_controlled_increment(1), formula_cinc_depth(1))
    assert rep.delta == 0 and rep.elementary == 1


@pytest.mark.parametrize("k", [3, 4, 8])
def test_compare_cinc_in_context(k):
    rep = compare(synth_controlled_increment(k), formula_cinc_depth(k), context_width=2 * k + 1)
    assert rep.delta == 1
    assert rep.measured == sum(rep.per_gate)
    assert rep.lines()[2] == "delta=1"


@pytest.mark.parametrize("n", [21, 30, 40, 50])
def test_compare_adder_ratio(n):
    rep = compare(synth_adder(n), summed_adder_depth(n))
    assert 0.9 <= rep.measured / (2 * n**3 / 3) <= 1.1
    # k=2 block is 3 under, every k>=3 block one over
    assert rep.delta == n - 5


def test_ratio_band_needs_large_n():
    # lower-order terms keep even the closed form itself above 1.1 at n=10
    assert formula_adder_depth(10) / (2 * 10**3 / 3) > 1.1
