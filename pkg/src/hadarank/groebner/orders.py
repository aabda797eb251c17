"""Monomial orders.

Each order exposes two keys over exponent tuples: ``sortkey`` (ascending in
the order) and ``heapkey`` (ascending = descending in the order, so a min-heap
pops the leading monomial first).
"""

from __future__ import annotations

from dataclasses import dataclass


def _grevlex_sort(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _grevlex_heap(m):
    return (-sum(m), tuple(reversed(m)))


def _lex_sort(m):
    return m


def _lex_heap(m):
    return tuple(-e for e in m)


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex`` or ``block``.

    A block order compares the first ``split`` exponents by grevlex and breaks
    ties by grevlex on the rest; it eliminates the first block.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.split <= 0:
            raise ValueError("block order needs a positive split index")

    @property
    def name(self) -> str:
        return f"block{self.split}" if self.kind == "block" else self.kind

    @property
    def sortkey(self):
        if self.kind == "grevlex":
            return _grevlex_sort
        if self.kind == "lex":
            return _lex_sort
        k = self.split
        return lambda m: (_grevlex_sort(m[:k]), _grevlex_sort(m[k:]))

    @property
    def heapkey(self):
        if self.kind == "grevlex":
            return _grevlex_heap
        if self.kind == "lex":
            return _lex_heap
        k = self.split
        return lambda m: (_grevlex_heap(m[:k]), _grevlex_heap(m[k:]))

    def leading(self, terms) -> tuple:
        return max(terms, key=self.sortkey)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)
