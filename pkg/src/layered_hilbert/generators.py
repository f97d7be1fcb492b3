"""Constructors for the graph families used throughout the package.

Level sizes are always listed top level first, matching ``C[m_N, ..., m_0]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph import LayeredGraph, is_uniform
from .poset import Poset


def complete_layered(*sizes: int) -> LayeredGraph:
    """C[m_N, ..., m_0]: every vertex is joined to every vertex one level down."""
    if not sizes:
        raise ValueError("need at least one level size")
    if any(not isinstance(m, int) or m < 1 for m in sizes):
        raise ValueError(f"level sizes must be positive integers, got {sizes}")
    N = len(sizes) - 1
    layers = {N - k: [f"L{N - k}_{j}" for j in range(1, m + 1)] for k, m in enumerate(sizes)}
    levels = {v: lvl for lvl, vs in layers.items() for v in vs}
    edges = [(v, w) for lvl in range(1, N + 1) for v in layers[lvl] for w in layers[lvl - 1]]
    return LayeredGraph(levels, edges)


def subset_id(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def boolean_graph(N: int) -> LayeredGraph:
    """Hasse diagram of the subsets of {1..N}, level = cardinality."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    ground = range(1, N + 1)
    subsets = [frozenset(c) for k in range(N + 1) for c in combinations(ground, k)]
    levels = {subset_id(s): len(s) for s in subsets}
    edges = [(subset_id(s), subset_id(s - {x})) for s in subsets for x in s]
    return LayeredGraph(levels, edges)


def cassidy_shelton(delete_b3_c2: bool = False) -> LayeredGraph:
    """The 5-level non-Koszul example; optionally with the edge (b3, c2) removed."""
    levels = {"a": 4, "*": 0}
    for k in (1, 2, 3):
        levels[f"b{k}"] = 3
        levels[f"c{k}"] = 2
        levels[f"d{k}"] = 1
    edges = [("a", f"b{i}") for i in (1, 2, 3)]
    edges += [(f"b{i}", f"c{j}") for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    edges += [(f"c{i}", f"d{j}") for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    edges += [(f"d{i}", "*") for i in (1, 2, 3)]
    if delete_b3_c2:
        edges.remove(("b3", "c2"))
    return LayeredGraph(levels, edges)


def prescribed_rs_bounds(r: int) -> tuple[int, int]:
    """Feasible s for a given r: r - 3 <= s <= -1 + (r-1)^2/4, as integers."""
    p = (r - 1) // 2
    q = r - 1 - p
    return (r - 3, p * q - 1)


def prescribed_rs(r: int, s: int) -> LayeredGraph:
    """Height-3 graph with one top vertex, |V_+| = r and |E_2| = s + 1.

    Starts from the spanning "comb" (b1 to every c, every b to c1) and adds
    the remaining level-2 edges in lexicographic (b_i, c_j) order.
    """
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    lo, hi = prescribed_rs_bounds(r)
    if not lo <= s <= hi:
        raise ValueError(f"s={s} outside the feasible range [{lo}, {hi}] for r={r}")
    p = (r - 1) // 2
    q = r - 1 - p
    bs = [f"b{k}" for k in range(1, p + 1)]
    cs = [f"c{k}" for k in range(1, q + 1)]
    levels = {"a": 3, "*": 0, **{b: 2 for b in bs}, **{c: 1 for c in cs}}
    mid = {("b1", c) for c in cs} | {(b, "c1") for b in bs}
    for b in bs:
        for c in cs:
            if len(mid) >= s + 1:
                break
            mid.add((b, c))
    edges = [("a", b) for b in bs] + sorted(mid) + [(c, "*") for c in cs]
    return LayeredGraph(levels, edges)


def palindromic_graph(r: int) -> LayeredGraph:
    """Height-3 graph whose A(G) has Hilbert series (1 - r t + r t^2 - t^3)^{-1}."""
    if r < 9:
        raise ValueError(f"r must be at least 9, got {r}")
    es = [f"e{k}" for k in range(1, r - 6)]
    levels = {"a": 3, "b1": 2, "b2": 2, "*": 0}
    levels.update({e: 2 for e in es})
    levels.update({v: 1 for v in ("c1", "c2", "d1", "d2")})
    edges = [("a", "b1"), ("a", "b2")]
    edges += [(b, c) for b in ("b1", "b2") for c in ("c1", "c2")]
    edges += [(e, c) for e in es[:2] for c in ("c1", "c2")]
    edges += [(e, d) for e in es for d in ("d1", "d2")]
    edges += [(v, "*") for v in ("c1", "c2", "d1", "d2")]
    return LayeredGraph(levels, edges)


def _head_components(succ: dict[str, set], heads) -> list[list[str]]:
    heads = sorted(heads)
    comps: list[list[str]] = []
    seen: set = set()
    for h in heads:
        if h in seen:
            continue
        comp, stack = [h], [h]
        seen.add(h)
        while stack:
            v = stack.pop()
            for w in heads:
                if w not in seen and succ[v] & succ[w]:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def random_uniform(seed: int, level_sizes, edge_prob: float = 0.5) -> LayeredGraph:
    """Reproducible random uniform layered graph with the given level sizes.

    Every vertex reaches exactly one level-0 vertex (its class): two level-0
    heads can never be joined by a down-up sequence, so mixing classes below
    one vertex could not be repaired.  Each vertex gets a random non-empty
    set of lower covers inside its class.  Tails are then repaired top-down:
    while the heads of ``t`` fall into several common-cover components, the
    lexicographically first edge from the second component into the lower
    covers of the first is added.
    """
    sizes = list(level_sizes)
    if not sizes or any(not isinstance(m, int) or m < 1 for m in sizes):
        raise ValueError(f"level sizes must be positive integers, got {sizes}")
    rng = random.Random(seed)
    N = len(sizes) - 1
    layers = {N - k: [f"v{N - k}_{j}" for j in range(1, m + 1)] for k, m in enumerate(sizes)}
    levels = {v: lvl for lvl, vs in layers.items() for v in vs}
    succ: dict[str, set] = {v: set() for v in levels}
    cls = {v: v for v in layers[0]}
    for lvl in range(1, N + 1):
        below = layers[lvl - 1]
        for v in layers[lvl]:
            c = rng.choice(sorted({cls[w] for w in below}))
            members = [w for w in below if cls[w] == c]
            chosen = {w for w in members if rng.random() < edge_prob} if lvl > 1 else set()
            if not chosen:
                chosen.add(rng.choice(members))
            succ[v] = chosen
            cls[v] = c
    for lvl in range(N, 2, -1):
        for t in layers[lvl]:
            while True:
                comps = _head_components(succ, succ[t])
                if len(comps) < 2:
                    break
                targets = sorted(set().union(*(succ[v] for v in comps[0])))
                succ[comps[1][0]].add(targets[0])
    graph = LayeredGraph(levels, [(v, w) for v in succ for w in succ[v]])
    assert is_uniform(graph).uniform
    return graph


def random_poset(seed: int, n: int, density: float = 0.3) -> Poset:
    """Random poset on ``0..n-1``: random relations i < j closed transitively."""
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    perm = list(range(n))
    rng.shuffle(perm)  # canonical order need not be a linear extension
    return Poset.from_relations(range(n), [(perm[i], perm[j]) for i, j in pairs])


@dataclass(frozen=True)
class FamilySpec:
    """Named graph family plus parameters; ``build()`` constructs the graph."""

    family: str
    params: tuple = field(default_factory=tuple)

    def build(self) -> LayeredGraph:
        f, p = self.family, self.params
        if f == "complete":
            return complete_layered(*p)
        if f == "boolean":
            return boolean_graph(*p)
        if f == "cassidy-shelton":
            return cassidy_shelton(False)
        if f == "cassidy-shelton-deleted":
            return cassidy_shelton(True)
        if f == "prescribed":
            return prescribed_rs(*p)
        if f == "palindromic":
            return palindromic_graph(*p)
        if f == "random":
            seed, *sizes = p
            return random_uniform(seed, sizes)
        raise ValueError(f"unknown family {f!r}")

    def __str__(self) -> str:
        return f"{self.family}({', '.join(map(str, self.params))})"


def named_families() -> list[FamilySpec]:
    """Small instances of every family that appears in the worked examples."""
    out = [FamilySpec("complete", (m2, m1, 1)) for m2 in (1, 2, 3) for m1 in (1, 2, 3)]
    out += [FamilySpec("complete", (2, 1)), FamilySpec("complete", (2, 2, 2, 1))]
    out += [FamilySpec("boolean", (n,)) for n in (1, 2, 3, 4)]
    out += [FamilySpec("cassidy-shelton"), FamilySpec("cassidy-shelton-deleted")]
    for r in range(3, 9):
        lo, hi = prescribed_rs_bounds(r)
        out += [FamilySpec("prescribed", (r, s)) for s in range(lo, hi + 1)]
    out += [FamilySpec("palindromic", (r,)) for r in (9, 10, 12)]
    return out


RANDOM_SHAPES = (
    (1, 2, 2, 1),
    (1, 3, 3, 1),
    (2, 3, 3, 1),
    (1, 2, 3, 2, 1),
    (2, 2, 2, 2, 1),
    (1, 3, 3, 2, 1),
    (3, 3, 2, 1),
    (2, 3, 2, 2, 1),
    (1, 3, 4, 3, 1),
    (2, 3, 3, 2),
)


def random_corpus(count: int = 20) -> list[FamilySpec]:
    """Seeded random uniform graphs, at most 12 vertices and height at most 4."""
    return [FamilySpec("random", (seed, *RANDOM_SHAPES[seed % len(RANDOM_SHAPES)])) for seed in range(count)]
