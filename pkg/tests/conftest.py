import numpy as np
import pytest

from nnborder import LabeledPointSet

_ACCEPTANCE: list[str] = []


def random_instance(rng: np.random.Generator, d: int, n: int, classes: int) -> LabeledPointSet:
    """Uniform coordinates in [-1, 1]^d with every class present."""
    labels = rng.integers(0, classes, n)
    labels[:classes] = np.arange(classes)
    rng.shuffle(labels)
    return LabeledPointSet.from_arrays(rng.uniform(-1, 1, (n, d)), [f"c{c}" for c in labels])


@pytest.fixture
def report():
    """Record one PASS/FAIL line for the acceptance summary."""

    def _report(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else ""))

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: s.split(":")[0][7:]):
            terminalreporter.write_line(line)
