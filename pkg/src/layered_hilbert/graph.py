"""Layered directed graphs and the poset they induce.

Vertices carry a level; a valid layered graph has every edge dropping the
level by exactly one.  The induced order is reachability: ``u > v`` iff a
directed path runs from ``u`` to ``v``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from .poset import Poset


class GraphError(ValueError):
    """Raised for malformed graph input or unknown vertices."""


class InvalidGraphError(GraphError):
    """Raised when an operation needs a valid layered graph and gets something else."""


class LayeredGraph:
    """Immutable layered graph.

    ``levels`` maps vertex ids (non-empty strings) to non-negative levels and
    ``edges`` holds ``(tail, head)`` pairs.  Construction does not enforce the
    layered condition; use :func:`validate` to inspect a graph, or
    :meth:`require_valid` before relying on it.
    """

    __slots__ = ("_levels", "_edges", "_hash", "__dict__")

    def __init__(self, levels: Mapping[str, int], edges: Iterable[tuple[str, str]]):
        levels = dict(levels)
        for v, lvl in levels.items():
            if not isinstance(v, str) or not v:
                raise GraphError(f"vertex id must be a non-empty string, got {v!r}")
            if not isinstance(lvl, int) or isinstance(lvl, bool):
                raise GraphError(f"level of {v!r} must be an integer, got {lvl!r}")
        self._levels = levels
        self._edges = frozenset((str(t), str(h)) for t, h in edges)
        self._hash = hash((frozenset(levels.items()), self._edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LayeredGraph):
            return NotImplemented
        return self._levels == other._levels and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LayeredGraph(|V|={len(self._levels)}, |E|={len(self._edges)}, N={self.height})"

    # -- basic data -----------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self._levels, key=lambda v: (self._levels[v], v)))

    @cached_property
    def edges(self) -> tuple[tuple[str, str], ...]:
        key = self._sort_key
        return tuple(sorted(self._edges, key=lambda e: (key(e[0]), key(e[1]))))

    @property
    def edge_set(self) -> frozenset:
        return self._edges

    @property
    def levels(self) -> Mapping[str, int]:
        return dict(self._levels)

    @cached_property
    def height(self) -> int:
        return max(self._levels.values(), default=0)

    def _sort_key(self, v):
        return (self._levels.get(v, -1), v)

    def level(self, v: str) -> int:
        self._check(v)
        return self._levels[v]

    def level_set(self, i: int) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self._levels[v] == i)

    @cached_property
    def positive_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self._levels[v] > 0)

    def edges_from_level(self, i: int) -> list[tuple[str, str]]:
        return [e for e in self.edges if self._levels.get(e[0]) == i]

    def _check(self, v: str) -> None:
        if v not in self._levels:
            raise GraphError(f"unknown vertex {v!r}")

    @cached_property
    def _succ(self) -> dict[str, frozenset]:
        out: dict[str, set] = {v: set() for v in self._levels}
        for t, h in self._edges:
            if t in out:
                out[t].add(h)
        return {v: frozenset(s) for v, s in out.items()}

    def successors(self, v: str) -> frozenset:
        self._check(v)
        return self._succ[v]

    # -- order ------------------------------------------------------------

    @cached_property
    def _position(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def _closure(self) -> dict[str, int]:
        # bitset of strict descendants, indexed by position in self.vertices
        self.require_valid()
        pos = self._position
        desc: dict[str, int] = {}
        for v in self.vertices:  # ascending level: successors are already done
            mask = 0
            for w in self._succ[v]:
                mask |= (1 << pos[w]) | desc[w]
            desc[v] = mask
        return desc

    def is_above(self, u: str, v: str) -> bool:
        """True iff ``u > v``, i.e. a directed path runs from ``u`` to ``v``."""
        self._check(u)
        self._check(v)
        return bool(self._closure[u] >> self._position[v] & 1)

    def down_set(self, u: str) -> frozenset:
        """All vertices strictly below ``u``."""
        return self._down[u]

    @cached_property
    def _down(self) -> dict[str, frozenset]:
        verts = self.vertices
        out = {}
        for v, mask in self._closure.items():
            out[v] = frozenset(verts[k] for k in range(mask.bit_length()) if mask >> k & 1)
        return out

    @cached_property
    def poset(self) -> Poset:
        return Poset(self.vertices, {v: self.down_set(v) for v in self.vertices})

    # -- validity ---------------------------------------------------------

    @cached_property
    def violations(self) -> tuple[str, ...]:
        out = []
        for v in self.vertices:
            if self._levels[v] < 0:
                out.append(f"vertex {v!r}: negative level {self._levels[v]}")
        for t, h in self.edges:
            missing = [x for x in (t, h) if x not in self._levels]
            if missing:
                out.append(f"edge ({t!r}, {h!r}): unknown vertex {', '.join(map(repr, missing))}")
                continue
            drop = self._levels[t] - self._levels[h]
            if drop != 1:
                out.append(f"edge ({t!r}, {h!r}): level drop {drop} != 1")
        return tuple(out)

    def require_valid(self) -> None:
        if self.violations:
            raise InvalidGraphError("; ".join(self.violations))

    # -- construction helpers ---------------------------------------------

    def induced(self, vertices: Iterable[str]) -> LayeredGraph:
        keep = set(vertices)
        for v in keep:
            self._check(v)
        return LayeredGraph(
            {v: self._levels[v] for v in keep},
            [(t, h) for t, h in self._edges if t in keep and h in keep],
        )

    def relabel(self, mapping: Mapping[str, str]) -> LayeredGraph:
        return LayeredGraph(
            {mapping[v]: lvl for v, lvl in self._levels.items()},
            [(mapping[t], mapping[h]) for t, h in self._edges],
        )

    def without_edge(self, tail: str, head: str) -> LayeredGraph:
        if (tail, head) not in self._edges:
            raise GraphError(f"no edge ({tail!r}, {head!r})")
        return LayeredGraph(self._levels, self._edges - {(tail, head)})

    def with_edges(self, extra: Iterable[tuple[str, str]]) -> LayeredGraph:
        return LayeredGraph(self._levels, self._edges | set(extra))


@dataclass(frozen=True)
class InducedSubgraph:
    """Subgraph of ``parent`` induced by ``vertices``; ``graph`` is it as a standalone graph."""

    parent: LayeredGraph
    vertices: frozenset
    graph: LayeredGraph

    @classmethod
    def of(cls, parent: LayeredGraph, vertices: Iterable[str]) -> InducedSubgraph:
        vertices = frozenset(vertices)
        return cls(parent, vertices, parent.induced(vertices))

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self.graph.edges

    @property
    def poset(self) -> Poset:
        return self.graph.poset


# -- module-level operations -------------------------------------------------


def validate(graph: LayeredGraph) -> list[str]:
    """Return the list of violations of the layered-graph invariants (empty if valid)."""
    return list(graph.violations)


def less_than(graph: LayeredGraph, u: str, v: str) -> bool:
    """True iff ``v`` lies strictly below ``u``: there is a directed path from ``u`` to ``v``."""
    return graph.is_above(u, v)


def covers(graph: LayeredGraph, u: str, v: str) -> bool:
    graph._check(u)
    graph._check(v)
    return (u, v) in graph.edge_set


def successor_set(graph: LayeredGraph, v: str) -> frozenset:
    return graph.successors(v)


def level_window_subgraph(graph: LayeredGraph, a: str, i: int) -> InducedSubgraph:
    """Subgraph induced by ``{w : a > w and |a| - |w| <= i - 1}``."""
    top = graph.level(a)
    return InducedSubgraph.of(graph, (w for w in graph.down_set(a) if top - graph.level(w) <= i - 1))


@dataclass(frozen=True)
class UniformityReport:
    uniform: bool
    failing_tails: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.uniform


def _heads_connected(graph: LayeredGraph, heads: frozenset) -> bool:
    # v ~ v' iff they share a lower cover; level-0 heads have none
    heads = sorted(heads)
    comp = {heads[0]}
    stack = [heads[0]]
    while stack:
        v = stack.pop()
        below = graph.successors(v)
        for w in heads:
            if w not in comp and below & graph.successors(w):
                comp.add(w)
                stack.append(w)
    return len(comp) == len(heads)


def is_uniform(graph: LayeredGraph) -> UniformityReport:
    graph.require_valid()
    failing = tuple(
        t for t in graph.vertices
        if len(graph.successors(t)) >= 2 and not _heads_connected(graph, graph.successors(t))
    )
    return UniformityReport(not failing, failing)


@dataclass(frozen=True)
class MinimalVertices:
    vertices: tuple[str, ...]
    all_level_zero: bool
    unique: bool


def minimal_vertices(graph: LayeredGraph) -> MinimalVertices:
    mins = tuple(v for v in graph.vertices if not graph.successors(v))
    return MinimalVertices(
        mins,
        all(graph.level(v) == 0 for v in mins),
        len(mins) == 1,
    )


# -- JSON ------------------------------------------------------------------------


def graph_from_json(doc: str | Mapping) -> LayeredGraph:
    """Parse ``{"vertices": [{"id": .., "level": ..}], "edges": [[tail, head], ..]}``."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, Mapping) or "vertices" not in doc or "edges" not in doc:
        raise GraphError('graph JSON needs "vertices" and "edges"')
    levels: dict[str, int] = {}
    for item in doc["vertices"]:
        try:
            vid, lvl = item["id"], item["level"]
        except (TypeError, KeyError) as exc:
            raise GraphError(f"bad vertex entry {item!r}") from exc
        if not isinstance(vid, str):
            raise GraphError(f"vertex id must be a string, got {vid!r}")
        if not isinstance(lvl, int) or isinstance(lvl, bool) or lvl < 0:
            raise GraphError(f"level of {vid!r} must be a non-negative integer")
        if vid in levels:
            raise GraphError(f"duplicate vertex {vid!r}")
        levels[vid] = lvl
    edges: list[tuple[str, str]] = []
    seen = set()
    for item in doc["edges"]:
        if not isinstance(item, (list, tuple)) or len(item) != 2 or not all(isinstance(x, str) for x in item):
            raise GraphError(f"bad edge entry {item!r}")
        e = (item[0], item[1])
        if e in seen:
            raise GraphError(f"duplicate edge {list(e)!r}")
        seen.add(e)
        edges.append(e)
    return LayeredGraph(levels, edges)


def graph_to_json(graph: LayeredGraph) -> dict:
    return {
        "vertices": [{"id": v, "level": graph.level(v)} for v in graph.vertices],
        "edges": [[t, h] for t, h in graph.edges],
    }
