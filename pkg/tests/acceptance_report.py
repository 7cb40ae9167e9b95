"""Collects one PASS/FAIL line per acceptance criterion."""

_RESULTS: dict[int, str] = {}


def record(number: int, title: str, passed: bool, detail: str) -> None:
    _RESULTS[number] = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}  [{detail}]"


def lines() -> list[str]:
    return [_RESULTS[k] for k in sorted(_RESULTS)]
