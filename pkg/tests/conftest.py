from pathlib import Path

import pytest

from planocc import maps

DATA = Path(__file__).resolve().parents[1] / "src" / "planocc" / "data"

# criterion -> (passed, detail); filled by test_acceptance and echoed at the end
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def battery() -> dict[str, maps.CombinatorialMap]:
    """Patterns cross-validated against the oracle."""
    return {
        "triangle": maps.cycle_map(3),
        "digon": maps.digon_map(),
        "triangle_with_chord": maps.triangle_with_chord(),
        "quad_with_diagonal": maps.quad_with_diagonal(),
        "triangle_with_pendant": maps.triangle_with_pendant(),
        "bridge": maps.bridge_map(),
    }


@pytest.fixture
def quad():
    return maps.load_map(DATA / "quad_diagonal.map")


@pytest.fixture
def hexagon():
    return maps.load_map(DATA / "hexagon_chord_pendant.map")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
