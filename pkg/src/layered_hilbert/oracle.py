"""Graded dimensions of B(G) straight from its presentation.

B(G) is generated by the positive-level vertices with relations ``u v = 0``
when there is no edge ``u -> v`` and ``v * (sum of S(v)) = 0`` for
``|v| > 1``.  Modulo the monomial relations the surviving words are the
descending edge paths ("path words"), so B_n is the span of length-n path
words divided by the image of the ideal generated by ``v * sum S(v)``.

This module does no order homology at all; it is the independent check on
:func:`layered_hilbert.series.hilbert_B`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import LayeredGraph
from .linalg import QQ, FieldSpec, vector_rank

PathWord = tuple


def enumerate_path_words(graph: LayeredGraph, n: int) -> list[PathWord]:
    """All length-n words of positive-level vertices joined consecutively by edges."""
    if n < 1:
        raise ValueError("path words have length at least 1")
    pos = set(graph.positive_vertices)
    words = [(v,) for v in graph.positive_vertices]
    for _ in range(n - 1):
        words = [w + (x,) for w in words for x in sorted(graph.successors(w[-1]) & pos, key=graph._sort_key)]
    key = graph._sort_key
    return sorted(words, key=lambda w: tuple(key(x) for x in w))


@dataclass
class PathWordSystem:
    degree: int
    basis: list[PathWord]
    relations: list[dict[int, int]]  # sparse vectors indexed by basis position

    def dimension(self, field: FieldSpec = QQ) -> int:
        return len(self.basis) - vector_rank(self.relations, field)


def relation_vectors(graph: LayeredGraph, n: int, field: FieldSpec = QQ) -> PathWordSystem:
    """Images of ``x * v * (sum S(v)) * y`` in the span of length-n path words.

    One vector per insertion site ``(x, v, y)`` that reaches at least one
    path word; every such site touches some path word, so sweeping the
    positions of every path word finds them all.
    """
    if n < 2:
        raise ValueError("relations start in degree 2")
    basis = enumerate_path_words(graph, n)
    index = {w: k for k, w in enumerate(basis)}
    pos = set(graph.positive_vertices)
    sites = {}
    for word in basis:
        for k in range(n - 1):
            v = word[k]
            if graph.level(v) < 2:
                continue
            x, y = word[:k], word[k + 2:]
            if (x, v, y) in sites:
                continue
            vec = {}
            for w in graph.successors(v) & pos:
                term = x + (v, w) + y
                if term in index:
                    vec[index[term]] = 1
            sites[(x, v, y)] = vec
    relations = list(sites.values())
    if field.p is not None:
        relations = [{k: c % field.p for k, c in r.items()} for r in relations]
    return PathWordSystem(n, basis, relations)


def b_graded_dims(graph: LayeredGraph, max_degree: int | None = None, field: FieldSpec = QQ) -> list[int]:
    """[dim B_0, ..., dim B_max_degree]; ``max_degree`` defaults to the height."""
    graph.require_valid()
    D = graph.height if max_degree is None else max_degree
    dims = [1]
    for n in range(1, D + 1):
        if n == 1:
            dims.append(len(graph.positive_vertices))
        else:
            dims.append(relation_vectors(graph, n, field).dimension(field))
    return dims[: D + 1]
