import pytest

from rfcodes.gf import field_make
from rfcodes.rfcode import CodeParams

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def _report(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _report


def params(q_spec: str, h: int) -> CodeParams:
    p, alpha = (int(x) for x in q_spec.split("^"))
    return CodeParams(field_make(p, alpha), h)


@pytest.fixture
def code():
    return params
