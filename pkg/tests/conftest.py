from pathlib import Path

import pytest

NIOBIUM_CONFIG = """\
# niobium, 560 kHz
material.tc_kelvin = 9.25
material.sigma_n_s_per_m = 2e8
material.lambda_l0_m = 35e-9
run.frequency_hz = 560e3
run.model = {model}
sweep.t_min_kelvin = {t_min}
sweep.t_max_kelvin = {t_max}
sweep.points = {points}
"""


def niobium_config(model="gc", t_min=4.625, t_max=9.25, points=3, extra=""):
    return NIOBIUM_CONFIG.format(model=model, t_min=t_min, t_max=t_max, points=points) + extra


@pytest.fixture
def config_file(tmp_path: Path):
    def write(text: str, name: str = "run.conf") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = dict(report.user_properties).get("measured", "")
        _acceptance[report.nodeid] = (report.outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (outcome, detail) in sorted(_acceptance.items()):
        name = nodeid.rsplit("::", 1)[-1]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  {detail}")
