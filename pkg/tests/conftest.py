import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    from fara import kernels

    terminalreporter.section(f"acceptance criteria (kernel backend: {kernels.BACKEND})")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line_for(n))
