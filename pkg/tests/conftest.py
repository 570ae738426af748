import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, seconds, detail in sorted(acceptance_log.RESULTS):
        terminalreporter.write_line(acceptance_log.line(number, passed, seconds, detail))
