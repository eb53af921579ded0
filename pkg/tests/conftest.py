import json
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"


def _load():
    raw = json.loads((GOLDEN_DIR / "oracle_values.json").read_text())

    def conv(v):
        if isinstance(v, list) and len(v) == 2 and all(isinstance(c, float) for c in v):
            return complex(*v)
        if isinstance(v, dict):
            return {k: conv(w) for k, w in v.items()}
        return v

    return {k: conv(v) for k, v in raw.items()}


ORACLE = _load()


@pytest.fixture(scope="session")
def oracle():
    return ORACLE


def rel_err(a, b):
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
