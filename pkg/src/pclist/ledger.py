"""Counters of charged unit operations."""

from __future__ import annotations

CATEGORIES = ("vertex_charge", "pclist_element_charge", "queue_op", "ledger_misc")


class WorkLedger:
    """Categorized, monotone work counters.

    Algorithms charge one unit per step of their charging argument, so a
    bound such as ``total() <= 8 * (n + m_tilde)`` becomes an assertion.
    """

    __slots__ = ("counts",)

    def __init__(self, counts=None):
        self.counts = dict.fromkeys(CATEGORIES, 0)
        if counts:
            for key, value in counts.items():
                self.charge(key, value)

    def reset(self) -> None:
        for key in self.counts:
            self.counts[key] = 0

    def charge(self, category: str, amount: int = 1) -> None:
        if category not in self.counts:
            raise KeyError(f"unknown ledger category {category!r}")
        if amount < 0:
            raise ValueError("charges are non-negative")
        self.counts[category] += int(amount)

    def charge_array(self, counts) -> None:
        """Add a length-4 count vector ordered as ``CATEGORIES``."""
        for key, value in zip(CATEGORIES, counts):
            self.charge(key, int(value))

    def merge(self, other: "WorkLedger") -> None:
        for key, value in other.counts.items():
            self.counts[key] += value

    def snapshot(self) -> "WorkLedger":
        return WorkLedger(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, category: str) -> int:
        return self.counts[category]

    def __sub__(self, other: "WorkLedger") -> "WorkLedger":
        return WorkLedger({k: self.counts[k] - other.counts[k] for k in CATEGORIES})

    def __repr__(self):
        body = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        return f"WorkLedger({body})"
