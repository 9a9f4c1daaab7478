import re


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion\[criterion-(\d+)\]", rep.nodeid)
            if m and rep.when == "call":
                lines.append((int(m.group(1)), "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n, verdict in sorted(lines):
            terminalreporter.write_line(f"criterion {n:>2}: {verdict}")
