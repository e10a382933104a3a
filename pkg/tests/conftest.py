def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, status, title, detail in sorted(mod.RESULTS):
        line = f"criterion {n:>2}: {status:<11} {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
