"""Exact rank of sparse integer matrices over Q or a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: rationals when ``p`` is None, else GF(p)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``q``/``Q`` or ``p:PRIME``."""
        t = text.strip()
        if t.lower() == "q":
            return cls()
        if t.lower().startswith("p:"):
            try:
                return cls(int(t[2:]))
            except ValueError as exc:
                raise ValueError(f"bad field {text!r}: {exc}") from None
        raise ValueError(f"bad field {text!r}; expected 'q' or 'p:PRIME'")

    @property
    def label(self) -> str:
        return "Q" if self.p is None else f"Fp({self.p})"

    def __str__(self) -> str:
        return self.label


QQ = FieldSpec()


def _is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class SparseMatrix:
    """Integer matrix stored column-wise as ``{row: value}`` dicts."""

    def __init__(self, nrows: int, ncols: int, columns: list[dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.columns = columns if columns is not None else [{} for _ in range(ncols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.columns[c].get(r, 0)

    def transpose(self) -> SparseMatrix:
        cols: list[dict[int, int]] = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                cols[r][c] = v
        return SparseMatrix(self.ncols, self.nrows, cols)

    def rows(self) -> list[dict[int, int]]:
        return self.transpose().columns

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)


def rank(matrix: SparseMatrix, field: FieldSpec = QQ) -> int:
    """Rank by elimination on the column vectors."""
    return vector_rank(matrix.columns, field)


def vector_rank(vectors, field: FieldSpec = QQ) -> int:
    """Dimension of the span of sparse integer vectors (dicts index -> value)."""
    if field.p is None:
        return _rank_q(vectors)
    return _rank_p(vectors, field.p)


def _rank_q(vectors) -> int:
    # fraction-free: rows stay integral and primitive (content divided out)
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for vec in vectors:
        v = {k: x for k, x in vec.items() if x}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                if g > 1:
                    v = {k: x // g for k, x in v.items()}
                pivots[lead] = v
                r += 1
                break
            a, b = piv[lead], v[lead]
            new = {k: a * x for k, x in v.items()}
            for k, x in piv.items():
                y = new.get(k, 0) - b * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            v = new
    return r


def _rank_p(vectors, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for vec in vectors:
        v = {k: x % p for k, x in vec.items() if x % p}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {k: x * inv % p for k, x in v.items()}
                r += 1
                break
            c = v[lead]
            for k, x in piv.items():
                y = (v.get(k, 0) - c * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r
