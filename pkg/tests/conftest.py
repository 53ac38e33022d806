from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# criterion number -> list of (label, passed, detail), filled by test_acceptance
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        checks = ACCEPTANCE_RESULTS[number]
        ok = all(passed for _, passed, _ in checks)
        failed = [f"{label}: {detail}" for label, passed, detail in checks if not passed]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}"
        if failed:
            line += "  (" + "; ".join(failed) + ")"
        terminalreporter.write_line(line)
