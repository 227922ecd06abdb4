"""Prints one verdict line per acceptance criterion at the end of a run."""

ACCEPTANCE_CRITERIA = {
    1: "Hopf axioms for H_CK, labeled H_CK, shuffle, quasi-shuffle, H_F",
    2: "GL/CK duality adjunctions through degree 5",
    3: "Hoffman isomorphism, product law, and dual round-trip",
    4: "pi: cocycle law, product law, kernel, universal lift",
    5: "Lyndon counts vs free-Lie ranks, foliage round-trip, Hall axioms",
    6: "PBW spans of dimension 2^(n-1)",
    7: "Zhao primitives and Z*(cherry)",
    8: "morphism diagram squares, duals, and hexagon reports",
    9: "frame coefficients vs iterated integrals",
    10: "Hall representation of the frame, exact through weight 5",
    11: "CLI golden files and check exit code",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid:
                continue
            name = nodeid.rsplit("::", 1)[-1]
            if not name.startswith("test_c"):
                continue
            try:
                num = int(name[6:8])
            except ValueError:
                continue
            verdicts[num] = "PASS" if outcome == "passed" else "FAIL"
    if not verdicts:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(ACCEPTANCE_CRITERIA):
        if num in verdicts:
            terminalreporter.write_line(
                f"criterion {num:2d}: {verdicts[num]}  {ACCEPTANCE_CRITERIA[num]}")
