"""Exact integer combinatorics: factorials, falling factorials, binomials."""

from __future__ import annotations

import threading

__all__ = ["factorial", "falling_factorial", "binomial"]

_lock = threading.Lock()
_factorials: list[int] = [1]


def _check_index(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def factorial(n: int) -> int:
    """Return ``n!`` exactly.

    Values are memoized up to the largest index requested so far; the table
    only ever grows, and readers see either the old or the extended list.
    """
    _check_index("n", n)
    table = _factorials
    if n < len(table):
        return table[n]
    with _lock:
        table = _factorials
        if n >= len(table):
            extended = list(table)
            acc = extended[-1]
            for j in range(len(extended), n + 1):
                acc *= j
                extended.append(acc)
            _set_table(extended)
            table = extended
    return table[n]


def _set_table(table: list[int]) -> None:
    global _factorials
    _factorials = table


def falling_factorial(n: int, length: int) -> int:
    """``n (n-1) ... (n-length+1)``, i.e. ``n! / (n-length)!`` for ``length <= n``."""
    _check_index("n", n)
    _check_index("length", length)
    if length > n:
        return 0
    out = 1
    for j in range(n - length + 1, n + 1):
        out *= j
    return out


def binomial(n: int, r: int) -> int:
    """Binomial coefficient C(n, r); zero when ``r > n``."""
    _check_index("n", n)
    _check_index("r", r)
    if r > n:
        return 0
    r = min(r, n - r)
    return falling_factorial(n, r) // factorial(r)
