import pytest

from acceptance_log import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} ({detail})")


@pytest.fixture
def exact_params():
    from heunlocal.params import HeunValentParams
    return HeunValentParams.make("exact", k="1/2", alpha=1, beta=2, gamma=3, delta=0, w=1)
