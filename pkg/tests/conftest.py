from hypothesis import strategies as st

from cyclic.cycles import all_cycles, cycle_from_cycle_notation

CYC5 = "(1 2 4 5 3)"
CYC6 = "(1 2 5 6 3 4)"
CYC8 = "(1 2 4 7 5 6 8 3)"


def cycles_up_to(qmax, qmin=2):
    for q in range(qmin, qmax + 1):
        yield from all_cycles(q)


@st.composite
def q_cycles(draw, min_q=2, max_q=9):
    q = draw(st.integers(min_q, max_q))
    rest = draw(st.permutations(list(range(2, q + 1))))
    return cycle_from_cycle_notation([1, *rest])


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                rows.append((rep.nodeid, outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(rows):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
