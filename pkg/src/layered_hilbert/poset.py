"""Finite posets with a fixed element order.

Every poset in the package is stored as a tuple of elements in canonical
order together with the strict down-set of each element.  Chains, matrix
indices and all printed output follow the canonical order, so results are
reproducible.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field

Element = Hashable


@dataclass(frozen=True)
class Poset:
    elements: tuple
    below: Mapping[Element, frozenset]  # below[x] = {y : y < x}
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {x: k for k, x in enumerate(self.elements)})
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate poset elements")

    @classmethod
    def from_relations(cls, elements: Iterable[Element], pairs: Iterable[tuple]) -> Poset:
        """Build the poset generated by ``pairs`` of the form ``(smaller, larger)``.

        The transitive closure is taken; a cycle raises ``ValueError``.
        """
        elements = tuple(elements)
        up: dict = {x: set() for x in elements}
        for lo, hi in pairs:
            if lo not in up or hi not in up:
                raise KeyError(f"unknown element in relation {(lo, hi)!r}")
            up[hi].add(lo)
        below: dict = {}
        visiting: set = set()

        def close(x):
            if x in below:
                return below[x]
            if x in visiting:
                raise ValueError("relations contain a cycle")
            visiting.add(x)
            acc = set()
            for y in up[x]:
                acc.add(y)
                acc |= close(y)
            visiting.discard(x)
            below[x] = frozenset(acc)
            return below[x]

        for x in elements:
            close(x)
        return cls(elements, below)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def less(self, x, y) -> bool:
        return x in self.below[y]

    def above(self, x) -> list:
        """Elements strictly greater than ``x`` in canonical order."""
        return [y for y in self.elements if x in self.below[y]]

    def subposet(self, subset: Iterable[Element]) -> Poset:
        keep = set(subset)
        elems = tuple(x for x in self.elements if x in keep)
        return Poset(elems, {x: self.below[x] & keep for x in elems})

    def open_interval(self, x, y) -> Poset:
        return self.subposet(z for z in self.below[y] if x in self.below[z])

    def is_connected(self) -> bool:
        """Connectivity of the comparability graph; the empty poset counts as disconnected."""
        if not self.elements:
            return False
        adj = {x: set(self.below[x]) for x in self.elements}
        for x in self.elements:
            for y in self.below[x]:
                adj[y].add(x)
        seen = {self.elements[0]}
        stack = [self.elements[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.elements)

    def relabel(self, mapping: Mapping) -> Poset:
        """Rename elements; the canonical order is re-derived from the new names' sort order."""
        elems = tuple(sorted((mapping[x] for x in self.elements), key=_sort_key))
        inv = {mapping[x]: x for x in self.elements}
        return Poset(elems, {y: frozenset(mapping[z] for z in self.below[inv[y]]) for y in elems})


def _sort_key(x):
    return (type(x).__name__, x)
