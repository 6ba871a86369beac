# filled by test_acceptance.py, printed by conftest after the run
LINES = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" ({detail})" if detail else "")
    LINES.append(line)
    print(line)
