"""Shared record of acceptance outcomes, reported at the end of the pytest run."""
RESULTS: list[tuple[int, bool, float, str]] = []


def line(number: int, passed: bool, seconds: float, detail: str) -> str:
    return f"criterion {number}: {'PASS' if passed else 'FAIL'} ({seconds:.1f}s) {detail}"
