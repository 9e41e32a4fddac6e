import random

import pytest
from hypothesis import strategies as st

from revadd.circuit import NEG, POS, Circuit, Gate


@st.composite
def gates(draw, width: int, max_controls: int | None = None):
    target = draw(st.integers(0, width - 1))
    others = [w for w in range(width) if w != target]
    limit = len(others) if max_controls is None else min(max_controls, len(others))
    wires = draw(st.lists(st.sampled_from(others), unique=True, max_size=limit)) if others else []
    pols = draw(st.lists(st.sampled_from([POS, NEG]), min_size=len(wires), max_size=len(wires)))
    return Gate(tuple(zip(wires, pols)), target)


@st.composite
def circuits(draw, width: int, max_gates: int = 20):
    return Circuit(width, draw(st.lists(gates(width), max_size=max_gates)))


def random_circuit(width: int, n_gates: int, seed: int, max_controls: int | None = None) -> Circuit:
    rng = random.Random(seed)
    out = []
    for _ in range(n_gates):
        target = rng.randrange(width)
        others = [w for w in range(width) if w != target]
        k = rng.randint(0, len(others) if max_controls is None else min(max_controls, len(others)))
        out.append(Gate(tuple((w, rng.choice([POS, NEG])) for w in rng.sample(others, k)), target))
    return Circuit(width, out)


@pytest.fixture
def rng():
    return random.Random(1234)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
