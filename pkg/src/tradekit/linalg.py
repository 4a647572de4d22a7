"""Dense exact linear algebra over the rationals.

Rank, right null space and span queries are the independent oracle behind
every verification in this package, so there is no floating point anywhere.
Rank-only paths rescale each row to coprime integers (which preserves rank)
and eliminate with integer cross-multiplication plus gcd reduction; the null
space is computed by plain rational row reduction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

Vector = tuple[Fraction, ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _scaled_int_row(row: Sequence) -> list[int]:
    """Rescale a rational row to coprime integers; the zero row stays zero."""
    fr = [x if isinstance(x, Fraction) else Fraction(x) for x in row]
    m = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [x.numerator * (m // x.denominator) for x in fr]
    g = gcd(*ints) if ints else 0
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _eliminate(rows: list[list[int]]) -> int:
    """In-place forward elimination over the integers; returns the rank.

    Pivot choice: first nonzero entry scanning top-to-bottom.  Updated rows
    are divided by their gcd to keep entries small.
    """
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            q = rows[i][col]
            if q:
                new = [a * p - b * q for a, b in zip(rows[i], prow)]
                g = gcd(*new)
                rows[i] = [v // g for v in new] if g > 1 else new
        rank += 1
        if rank == nrows:
            break
    return rank


class RationalMatrix:
    """An immutable dense matrix of exact rationals."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in rows]
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError(f"ragged rows: expected {ncols} columns, got {len(row)}")
        self.nrows = len(data)
        self.ncols = ncols
        self._rows = data

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RationalMatrix:
        return cls([[_F0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[_F1 if i == j else _F0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return tuple(self._rows[i])

    def rows(self) -> Iterator[Vector]:
        for r in self._rows:
            yield tuple(r)

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"

    def rank(self) -> int:
        """Exact rank over the rationals."""
        return _eliminate([_scaled_int_row(r) for r in self._rows])

    def matvec(self, v: Sequence) -> Vector:
        """Exact matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError(f"dimension mismatch: {self.ncols} columns vs vector of {len(v)}")
        vf = [x if isinstance(x, Fraction) else Fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, vf)), _F0) for row in self._rows)

    def kernel_basis(self) -> list[Vector]:
        """A basis of the right null space; its length is ncols - rank."""
        rows = [list(r) for r in self._rows]
        pivots: list[int] = []
        r = 0
        for col in range(self.ncols):
            piv = None
            for i in range(r, len(rows)):
                if rows[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][col]
            rows[r] = [x / inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [_F0] * self.ncols
            v[free] = _F1
            for i, pc in enumerate(pivots):
                v[pc] = -rows[i][free]
            basis.append(tuple(v))
        return basis


class IntegerEchelon:
    """Incremental row-echelon accumulator for exact span and rank queries.

    Rows are kept as coprime integer vectors; each stored row's first nonzero
    entry sits at a distinct pivot column.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._pivots: list[int] = []
        self._rows: list[list[int]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Sequence) -> list[int]:
        v = _scaled_int_row(vec)
        if len(v) != self.dim:
            raise ValueError(f"dimension mismatch: expected {self.dim}, got {len(v)}")
        for pc, row in zip(self._pivots, self._rows):
            c = v[pc]
            if c:
                p = row[pc]
                v = [a * p - b * c for a, b in zip(v, row)]
                g = gcd(*v)
                if g > 1:
                    v = [x // g for x in v]
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; returns True iff it enlarged the span."""
        v = self._reduce(vec)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        if v[pivot] < 0:
            v = [-x for x in v]
        at = 0
        while at < len(self._pivots) and self._pivots[at] < pivot:
            at += 1
        self._pivots.insert(at, pivot)
        self._rows.insert(at, v)
        return True

    def contains(self, vec: Sequence) -> bool:
        """True iff the vector already lies in the accumulated span."""
        return all(x == 0 for x in self._reduce(vec))


def rank_of_columns(vectors: Iterable[Sequence]) -> int:
    """Rank of the matrix whose columns are the given vectors."""
    ech: IntegerEchelon | None = None
    for v in vectors:
        if ech is None:
            ech = IntegerEchelon(len(v))
        ech.add(v)
    return 0 if ech is None else ech.rank


def in_span(v: Sequence, vectors: Iterable[Sequence]) -> bool:
    """True iff v lies in the rational span of the given vectors."""
    ech = IntegerEchelon(len(v))
    for w in vectors:
        ech.add(w)
    return ech.contains(v)


def render_dense(m: RationalMatrix) -> str:
    """Dense text form: `rows cols` then one whitespace-separated line per row."""
    lines = [f"{m.nrows} {m.ncols}"]
    for row in m.rows():
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def render_sparse(m: RationalMatrix) -> str:
    """Sparse text form: `rows cols nnz` then `i j value` triples, 1-based."""
    triples = [
        (i + 1, j + 1, x)
        for i, row in enumerate(m.rows())
        for j, x in enumerate(row)
        if x
    ]
    lines = [f"{m.nrows} {m.ncols} {len(triples)}"]
    for i, j, x in triples:
        lines.append(f"{i} {j} {x}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> RationalMatrix:
    """Parse either matrix text form (dense: 2 header fields, sparse: 3)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) == 2:
        nrows, ncols = map(int, header)
        if len(lines) != nrows + 1:
            raise ValueError(f"expected {nrows} rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            row = [Fraction(tok) for tok in ln.split()]
            if len(row) != ncols:
                raise ValueError(f"expected {ncols} entries per row, got {len(row)}")
            rows.append(row)
        return RationalMatrix(rows, ncols)
    if len(header) == 3:
        nrows, ncols, nnz = map(int, header)
        if len(lines) != nnz + 1:
            raise ValueError(f"expected {nnz} triples, got {len(lines) - 1}")
        rows = [[_F0] * ncols for _ in range(nrows)]
        seen = set()
        for ln in lines[1:]:
            si, sj, sval = ln.split()
            i, j = int(si) - 1, int(sj) - 1
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError(f"index ({si}, {sj}) out of range")
            if (i, j) in seen:
                raise ValueError(f"duplicate entry at ({si}, {sj})")
            seen.add((i, j))
            rows[i][j] = Fraction(sval)
        return RationalMatrix(rows, ncols)
    raise ValueError(f"bad matrix header: {lines[0]!r}")
