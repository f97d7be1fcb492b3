"""Order complexes of finite posets: chains, boundary maps, reduced (co)homology.

Chains are tuples ``(x_0, ..., x_i)`` with ``x_0 < ... < x_i``; the empty
tuple is the unique (-1)-chain and is always materialised, so reduced
homology needs no special cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import InducedSubgraph, LayeredGraph
from .linalg import QQ, FieldSpec, SparseMatrix, rank
from .poset import Poset

PosetLike = Union[Poset, LayeredGraph, InducedSubgraph]
Chain = tuple


def as_poset(obj: PosetLike) -> Poset:
    if isinstance(obj, Poset):
        return obj
    if isinstance(obj, (LayeredGraph, InducedSubgraph)):
        return obj.poset
    raise TypeError(f"expected a poset or layered graph, got {type(obj).__name__}")


def poset_length(obj: PosetLike) -> int:
    """l(P): the length of a longest chain, -1 for the empty poset."""
    P = as_poset(obj)
    depth: dict = {}
    for x in _linear_extension(P):
        depth[x] = 1 + max((depth[y] for y in P.below[x]), default=-1)
    return max(depth.values(), default=-1)


def _linear_extension(P: Poset) -> list:
    # strictly larger elements have strictly larger down-sets
    return sorted(P.elements, key=lambda x: (len(P.below[x]), P.index(x)))


@dataclass
class ChainTable:
    poset: Poset
    chains: dict[int, list[Chain]]
    index: dict[int, dict[Chain, int]] = field(repr=False)

    @property
    def max_degree(self) -> int:
        return max(self.chains)

    def count(self, i: int) -> int:
        return len(self.chains.get(i, ()))

    def counts(self) -> dict[int, int]:
        return {i: len(c) for i, c in sorted(self.chains.items())}


def enumerate_chains(obj: PosetLike, max_degree: int | None = None) -> ChainTable:
    """All chains of degree -1 .. ``max_degree`` (default: until none remain).

    Each degree is listed lexicographically in the poset's canonical element
    order; for layered graphs that is ascending ``(level, id)``.
    """
    P = as_poset(obj)
    ups = {x: P.above(x) for x in P.elements}
    chains: dict[int, list[Chain]] = {-1: [()]}
    current = [(x,) for x in P.elements]
    deg = 0
    while current and (max_degree is None or deg <= max_degree):
        chains[deg] = current
        current = [c + (y,) for c in current for y in ups[c[-1]]]
        deg += 1
    if max_degree is not None:
        for d in range(deg, max_degree + 1):
            chains[d] = []
    index = {d: {c: k for k, c in enumerate(cs)} for d, cs in chains.items()}
    return ChainTable(P, chains, index)


def face(chain: Chain, l: int) -> Chain:
    """Delete the ``l``-th entry."""
    if not 0 <= l < len(chain):
        raise IndexError(f"face index {l} out of range for a chain with {len(chain)} entries")
    return chain[:l] + chain[l + 1:]


def boundary_matrix(table: ChainTable, i: int, field: FieldSpec = QQ) -> SparseMatrix:
    """Matrix of d_i: rows are (i-1)-chains, columns are i-chains."""
    rows = table.chains.get(i - 1, [])
    cols = table.chains.get(i, [])
    if i < 0 or not rows:
        return SparseMatrix(len(rows), len(cols))
    row_index = table.index[i - 1]
    out = []
    for x in cols:
        col = {}
        for l in range(len(x)):
            sign = -1 if l % 2 else 1
            if field.p is not None:
                sign %= field.p
            col[row_index[face(x, l)]] = sign
        out.append(col)
    return SparseMatrix(len(rows), len(cols), out)


@dataclass(frozen=True)
class BettiTable:
    """Dimensions of reduced (co)homology in degrees -1 .. l(P)."""

    dims: dict[int, int]
    field: FieldSpec = QQ

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims.items())

    def to_json(self) -> dict:
        return {"field": self.field.label, "dims": {str(i): d for i, d in sorted(self.dims.items())}}


def _betti(obj: PosetLike, field: FieldSpec, dual: bool) -> BettiTable:
    table = enumerate_chains(obj)
    top = table.max_degree
    ranks = {}
    for i in range(0, top + 1):
        d = boundary_matrix(table, i, field)
        ranks[i] = rank(d.transpose() if dual else d, field)
    dims = {}
    for i in range(-1, top + 1):
        dims[i] = table.count(i) - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return BettiTable(dims, field)


def reduced_homology_dims(obj: PosetLike, field: FieldSpec = QQ) -> BettiTable:
    """dim H~_i = dim ker d_i - rank d_{i+1}."""
    return _betti(obj, field, dual=False)


def reduced_cohomology_dims(obj: PosetLike, field: FieldSpec = QQ, check: bool = True) -> BettiTable:
    """dim H~^i = dim ker of the coboundary out of C^i minus rank of the one into it.

    The coboundaries are the transposed boundary matrices and are ranked as
    such.  With ``check`` the homology dimensions are computed too and must
    agree.
    """
    co = _betti(obj, field, dual=True)
    if check:
        ho = _betti(obj, field, dual=False)
        if ho.dims != co.dims:
            raise AssertionError(f"cohomology {co.dims} != homology {ho.dims}")
    return co


def mobius(obj: PosetLike) -> int:
    """mu(0^, 1^) in P with a bottom and top adjoined, by signed chain counting."""
    P = as_poset(obj)
    # counts[x][k] = number of k-chains 0^ = y_0 < ... < y_k = x
    counts: dict = {}
    for x in _linear_extension(P):
        acc = {1: 1}
        for y in P.below[x]:
            for k, c in counts[y].items():
                acc[k + 1] = acc.get(k + 1, 0) + c
        counts[x] = acc
    top = {1: 1}  # the chain (0^, 1^)
    for cs in counts.values():
        for k, c in cs.items():
            top[k + 1] = top.get(k + 1, 0) + c
    return sum((-1) ** k * c for k, c in top.items())


BOTTOM = "<bottom>"
TOP = "<top>"


@dataclass(frozen=True)
class CohenMacaulayReport:
    cohen_macaulay: bool
    failing: tuple  # ((x, y, {degree: dim}), ...) for offending open intervals

    def __bool__(self) -> bool:
        return self.cohen_macaulay


def is_cohen_macaulay(obj: PosetLike, field: FieldSpec = QQ, strict: bool = False) -> CohenMacaulayReport:
    """Check that every open interval (x, y) has vanishing reduced homology below its dimension.

    ``strict`` also checks the intervals of the poset with a bottom and top
    adjoined, i.e. the principal up/down sets and the whole poset.
    """
    P = as_poset(obj)
    intervals = []
    for y in P.elements:
        for x in P.elements:
            if P.less(x, y):
                intervals.append((x, y, P.open_interval(x, y)))
    if strict:
        for y in P.elements:
            intervals.append((BOTTOM, y, P.subposet(P.below[y])))
        for x in P.elements:
            intervals.append((x, TOP, P.subposet(P.above(x))))
        intervals.append((BOTTOM, TOP, P))
    failing = []
    for x, y, sub in intervals:
        top = poset_length(sub)
        betti = reduced_homology_dims(sub, field)
        bad = {i: d for i, d in betti.dims.items() if i < top and d}
        if bad:
            failing.append((x, y, bad))
    return CohenMacaulayReport(not failing, tuple(failing))
