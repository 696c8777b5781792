import pytest

from slicekit.rootdatum import build_root_datum

SMALL_GROUPS = ["GL1", "GL2", "GL3", "GL4", "A1", "A2", "A3", "B2", "B3", "C2", "C3",
                "D4", "G2"]

_ACCEPTANCE = []


@pytest.fixture(params=SMALL_GROUPS)
def small_rd(request):
    return build_root_datum(request.param)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and rep.when == "call":
        detail = dict(item.user_properties).get("detail", "")
        _ACCEPTANCE.append((marker.args[0], rep.outcome.upper(), item.name, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, outcome, name, detail in sorted(_ACCEPTANCE):
        verdict = "PASS" if outcome == "PASSED" else "FAIL"
        line = f"criterion {crit}: {verdict}  ({name})"
        terminalreporter.write_line(line + (f"  {detail}" if detail else ""))
