"""Exceptions shared across solver and oracle entry points."""

from __future__ import annotations


class InvalidK(ValueError):
    """Subset size k outside the range the operation supports."""

    def __init__(self, k: int, lo: int, hi: int):
        self.k = k
        super().__init__(f"k={k} out of range [{lo}, {hi}]")


class TooLarge(ValueError):
    """Brute-force enumeration would exceed the configured subset limit."""
