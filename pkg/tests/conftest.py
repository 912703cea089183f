import json
import sys
from pathlib import Path

import pytest

from trusskit.truss import TrussModel

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_model(name: str) -> TrussModel:
    return TrussModel.from_dict(json.loads(fixture_path(name).read_text()))


@pytest.fixture
def r1():
    return load_model("r1.json")


@pytest.fixture
def r1_iso():
    return load_model("r1_iso.json")


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance.RESULTS):
            terminalreporter.write_line(line)
