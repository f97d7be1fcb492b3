"""Truncated integer power series and the Hilbert series of B(G) and A(G).

Every Hilbert-series coefficient here is a sum over pairs ``(a, i)`` of
reduced cohomology of the window ``G_{a,i}`` (the vertices strictly below
``a`` within ``i - 1`` levels).  Those Betti tables are memoised per
``(graph, a, i, field)`` and shared by all formulas.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import LayeredGraph, is_uniform, level_window_subgraph, minimal_vertices
from .homology import BettiTable, reduced_cohomology_dims
from .linalg import QQ, FieldSpec


class HypothesisError(ValueError):
    """The input violates a hypothesis the requested formula is stated under."""


class HypothesisWarning(UserWarning):
    """A formula was evaluated outside the hypotheses it is proven under."""


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @classmethod
    def of(cls, coeffs, truncation: int | None = None) -> TruncatedSeries:
        """Pad with zeros (or cut) to ``truncation``."""
        coeffs = list(coeffs)
        if truncation is None:
            truncation = len(coeffs) - 1
        coeffs = (coeffs + [0] * (truncation + 1))[: truncation + 1]
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, truncation: int) -> TruncatedSeries:
        return cls.of([1], truncation)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def truncate(self, degree: int) -> TruncatedSeries:
        return TruncatedSeries.of(self.coeffs, degree)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "truncation": self.truncation}


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.truncation != b.truncation:
        raise ValueError(f"truncation mismatch: {a.truncation} vs {b.truncation}")
    D = a.truncation
    out = [0] * (D + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(D + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(tuple(out))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not invertible over the integers")
    D = a.truncation
    b = [0] * (D + 1)
    b[0] = c0  # 1/c0 == c0 for c0 = +-1
    for n in range(1, D + 1):
        s = sum(a.coeffs[k] * b[n - k] for k in range(1, n + 1))
        b[n] = -c0 * s
    return TruncatedSeries(tuple(b))


def substitute_neg(a: TruncatedSeries) -> TruncatedSeries:
    """t -> -t."""
    return TruncatedSeries(tuple(-c if i % 2 else c for i, c in enumerate(a.coeffs)))


def render(a: TruncatedSeries, var: str = "t") -> str:
    """Human-readable form, e.g. ``1 + 3t + t^2``."""
    parts: list[str] = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = str(mag) if (mag != 1 or i == 0) else ""
        term = body + mono
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


# -- cohomology of windows ----------------------------------------------------


@lru_cache(maxsize=None)
def window_cohomology(graph: LayeredGraph, a: str, i: int, field: FieldSpec = QQ) -> BettiTable:
    """Reduced cohomology of the window below ``a`` of depth ``i``."""
    return reduced_cohomology_dims(level_window_subgraph(graph, a, i), field)


def _window_pairs(graph: LayeredGraph, i: int):
    return [a for a in graph.vertices if graph.level(a) >= i]


def _warn_if_not_uniform(graph: LayeredGraph, what: str) -> None:
    report = is_uniform(graph)
    if not report.uniform:
        warnings.warn(
            f"{what}: graph is not uniform (failing tails {list(report.failing_tails)}); "
            "the formula is evaluated but not guaranteed",
            HypothesisWarning,
            stacklevel=3,
        )


def hilbert_B(graph: LayeredGraph, field: FieldSpec = QQ) -> TruncatedSeries:
    """h(B(G), t) = 1 + sum over |a| >= i >= 1 of dim H^{i-2}(G_{a,i}) t^i, up to t^N."""
    graph.require_valid()
    _warn_if_not_uniform(graph, "hilbert_B")
    N = graph.height
    coeffs = [1] + [0] * N
    for i in range(1, N + 1):
        coeffs[i] = sum(window_cohomology(graph, a, i, field)[i - 2] for a in _window_pairs(graph, i))
    return TruncatedSeries(tuple(coeffs))


def hilbert_B_low_degree(graph: LayeredGraph) -> tuple[int, int, int, int]:
    """Coefficients of t^0..t^3 of h(B) from vertex and edge counts alone.

    Refuses non-uniform graphs: the t^3 term relies on every depth-3 window
    being connected.
    """
    graph.require_valid()
    report = is_uniform(graph)
    if not report.uniform:
        raise HypothesisError(f"graph is not uniform (failing tails {list(report.failing_tails)})")
    n_pos = len(graph.positive_vertices)
    upper_edges = sum(1 for t, _ in graph.edges if graph.level(t) >= 2)
    upper_vertices = sum(1 for v in graph.vertices if graph.level(v) >= 2)
    c3 = 0
    for x in graph.vertices:
        if graph.level(x) >= 3:
            w = level_window_subgraph(graph, x, 3)
            c3 += len(w.edges) - len(w.vertices) + 1
    return (1, n_pos, upper_edges - upper_vertices, c3)


def _alternating_window_sum(graph: LayeredGraph, i: int, s_max: int, field: FieldSpec) -> int:
    # sum over |a| >= i, 0 <= s <= s_max of (-1)^s dim H^{s-1}(G_{a,i})
    total = 0
    for a in _window_pairs(graph, i):
        betti = window_cohomology(graph, a, i, field)
        total += sum((-1) ** s * betti[s - 1] for s in range(0, s_max + 1))
    return total


def inv_hilbert_A(graph: LayeredGraph, field: FieldSpec = QQ) -> TruncatedSeries:
    """h(A(G), t)^{-1} = 1 - sum over |a| >= i, 0 <= s <= i-1 of (-1)^s dim H^{s-1}(G_{a,i}) t^i."""
    graph.require_valid()
    _warn_if_not_uniform(graph, "inv_hilbert_A")
    N = graph.height
    coeffs = [1] + [-_alternating_window_sum(graph, i, i - 1, field) for i in range(1, N + 1)]
    return TruncatedSeries(tuple(coeffs))


def signed_chain_counts(graph: LayeredGraph) -> dict[tuple[int, int], int]:
    """s_{g,h}: signed count (-1)^l of chains v_1 > ... > v_l of positive-level vertices.

    Keys are ``(|v_1|, |v_l|)``.
    """
    pos = set(graph.positive_vertices)
    # per start vertex: {end level: signed count of chains starting there}
    from_vertex: dict[str, dict[int, int]] = {}
    for v in graph.positive_vertices:  # ascending level, lower ones first
        acc = {graph.level(v): 1}
        for w in graph.down_set(v) & pos:
            for h, c in from_vertex[w].items():
                acc[h] = acc.get(h, 0) + c
        from_vertex[v] = {h: -c for h, c in acc.items()}
    s: dict[tuple[int, int], int] = {}
    for v, ends in from_vertex.items():
        g = graph.level(v)
        for h, c in ends.items():
            s[(g, h)] = s.get((g, h), 0) + c
    return s


def inv_hilbert_A_chain_count(graph: LayeredGraph) -> TruncatedSeries:
    """h(A(G), t)^{-1} by signed chain counting: coefficient of t^i is the sum of s_{g,h} over g >= i >= g-h+1.

    Needs a unique minimal vertex, at level 0.
    """
    graph.require_valid()
    mins = minimal_vertices(graph)
    if not (mins.unique and mins.all_level_zero):
        raise HypothesisError(f"needs a unique minimal vertex at level 0, found {list(mins.vertices)}")
    s = signed_chain_counts(graph)
    N = graph.height
    coeffs = [1] + [0] * N
    for i in range(1, N + 1):
        coeffs[i] = sum(c for (g, h), c in s.items() if g >= i >= g - h + 1)
    return TruncatedSeries(tuple(coeffs))


@dataclass(frozen=True)
class KoszulReport:
    defects: dict[int, int]  # degree i (3 <= i <= N) -> defect
    verdict: bool
    series_verdict: bool  # h(B, -t) == h(A, t)^{-1} coefficientwise
    hilbert_B: TruncatedSeries
    inv_hilbert_A: TruncatedSeries
    low_defects: dict[int, int] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.verdict == self.series_verdict

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "defects": {str(i): d for i, d in sorted(self.defects.items())},
            "series_check": self.series_verdict,
            "consistent": self.consistent,
            "hilbert_B": self.hilbert_B.to_json(),
            "inv_hilbert_A": self.inv_hilbert_A.to_json(),
        }


def check_koszul_hypotheses(graph: LayeredGraph) -> None:
    graph.require_valid()
    report = is_uniform(graph)
    if not report.uniform:
        raise HypothesisError(f"graph is not uniform (failing tails {list(report.failing_tails)})")
    mins = minimal_vertices(graph)
    if not mins.all_level_zero:
        off = [v for v in mins.vertices if graph.level(v) != 0]
        raise HypothesisError(f"minimal vertices off level 0: {off}")


def numerically_koszul(graph: LayeredGraph, field: FieldSpec = QQ) -> KoszulReport:
    """Decide numerical Koszulity from the window cohomology defects in degrees 3..N."""
    check_koszul_hypotheses(graph)
    N = graph.height
    low = {i: _alternating_window_sum(graph, i, i - 2, field) for i in (1, 2) if i <= N}
    if any(low.values()):
        raise AssertionError(f"defects in degrees 1, 2 must vanish, got {low}")
    defects = {i: _alternating_window_sum(graph, i, i - 2, field) for i in range(3, N + 1)}
    verdict = not any(defects.values())
    hb = hilbert_B(graph, field)
    ia = inv_hilbert_A(graph, field)
    report = KoszulReport(defects, verdict, substitute_neg(hb) == ia, hb, ia, low)
    if not report.consistent:
        raise AssertionError("defect verdict and series comparison disagree")
    return report


def koszul_product(graph: LayeredGraph, degree: int | None = None, field: FieldSpec = QQ) -> TruncatedSeries:
    """h(A, t) * h(B, -t) truncated at ``degree``; equals 1 exactly when numerically Koszul."""
    D = graph.height if degree is None else degree
    hA = series_inverse(inv_hilbert_A(graph, field).truncate(D))
    return series_mul(hA, substitute_neg(hilbert_B(graph, field).truncate(D)))
