"""Two-row column tabloids: sign canonicalization, adjacent-column relations,
standard fillings, straightening, and the linear map onto total trades.

A column tabloid is a two-row filling taken modulo transpositions inside a
column, so sorting each height-2 column costs a sign.  The adjacent-column
elements built by `garnir` span the relations that present the irreducible
two-row representation as a quotient, and `straighten` rewrites any tabloid
expression into the standard-filling basis with integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .boolean_algebra import BooleanElement
from .combinatorics import binomial
from .trades import TradeSpec, total_trade

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class TwoRowShape:
    """A partition with at most two parts; the filled entries are 1..n."""

    lambda1: int
    lambda2: int

    def __post_init__(self) -> None:
        if not 0 <= self.lambda2 <= self.lambda1:
            raise ValueError(
                f"need lambda1 >= lambda2 >= 0, got ({self.lambda1}, {self.lambda2})"
            )

    @property
    def n(self) -> int:
        return self.lambda1 + self.lambda2


@dataclass(frozen=True)
class Tableau:
    """A filling of a two-row shape with each of 1..n used exactly once."""

    shape: TwoRowShape
    row1: tuple[int, ...]
    row2: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))
        if len(self.row1) != self.shape.lambda1 or len(self.row2) != self.shape.lambda2:
            raise ValueError(
                f"rows of length {len(self.row1)}/{len(self.row2)} do not fit shape "
                f"({self.shape.lambda1}, {self.shape.lambda2})"
            )
        if sorted(self.row1 + self.row2) != list(range(1, self.shape.n + 1)):
            raise ValueError(f"entries must be exactly 1..{self.shape.n}, each once")


@dataclass(frozen=True)
class Tabloid:
    """A column-canonical tableau plus the sign accumulated by canonicalization."""

    tableau: Tableau
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +-1, got {self.sign}")


def canonicalize(t: Tableau) -> Tabloid:
    """Sort every height-2 column increasing top-to-bottom; each swap flips the sign."""
    r1 = list(t.row1)
    r2 = list(t.row2)
    sign = 1
    for c in range(len(r2)):
        if r1[c] > r2[c]:
            r1[c], r2[c] = r2[c], r1[c]
            sign = -sign
    return Tabloid(Tableau(t.shape, tuple(r1), tuple(r2)), sign)


def is_standard(t: Tableau) -> bool:
    """Rows strictly increase left-to-right and columns top-to-bottom."""
    r1, r2 = t.row1, t.row2
    return (
        all(r1[i] < r1[i + 1] for i in range(len(r1) - 1))
        and all(r2[i] < r2[i + 1] for i in range(len(r2) - 1))
        and all(r1[i] < r2[i] for i in range(len(r2)))
    )


def standard_tableaux(shape: TwoRowShape) -> list[Tableau]:
    """All standard fillings, sorted by (row1, row2); there are
    C(n, lambda2) - C(n, lambda2 - 1) of them."""
    n = shape.n
    out = []
    for row2 in combinations(range(1, n + 1), shape.lambda2):
        in_row2 = set(row2)
        row1 = tuple(x for x in range(1, n + 1) if x not in in_row2)
        if all(row1[i] < row2[i] for i in range(shape.lambda2)):
            out.append(Tableau(shape, row1, row2))
    out.sort(key=lambda t: (t.row1, t.row2))
    return out


def specht_dim(shape: TwoRowShape) -> int:
    """C(n, lambda2) - C(n, lambda2 - 1), the dimension of the two-row irreducible."""
    n = shape.n
    return binomial(n, shape.lambda2) - binomial(n, shape.lambda2 - 1)


def young_rule(k: int, n: int) -> list[TwoRowShape]:
    """Shapes (n-j, j) for j = 0..min(k, n-k); their dimensions sum to C(n, k)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k} n={n}")
    return [TwoRowShape(n - j, j) for j in range(min(k, n - k) + 1)]


class TabloidExpr:
    """A rational combination of column tabloids of one shape.

    Terms are keyed by canonical tableaux; the canonicalization sign is folded
    into the coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable = ()):
        acc: dict[Tableau, Fraction] = {}
        shape = None
        for item, coeff in terms:
            if isinstance(item, Tabloid):
                tab, sgn = item.tableau, item.sign
            else:
                q = canonicalize(item)
                tab, sgn = q.tableau, q.sign
            if shape is None:
                shape = tab.shape
            elif tab.shape != shape:
                raise ValueError("mixed shapes in one tabloid expression")
            c = sgn * (coeff if isinstance(coeff, Fraction) else Fraction(coeff))
            acc[tab] = acc.get(tab, _F0) + c
        self._terms = {t: c for t, c in acc.items() if c}

    @classmethod
    def _make(cls, terms: dict[Tableau, Fraction]) -> TabloidExpr:
        self = cls.__new__(cls)
        self._terms = terms
        return self

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, t: Tableau) -> Fraction:
        q = canonicalize(t)
        return q.sign * self._terms.get(q.tableau, _F0)

    def terms(self) -> list[tuple[Tableau, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0].row1, kv[0].row2))

    def tableaux(self) -> list[Tableau]:
        return [t for t, _ in self.terms()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TabloidExpr):
            return NotImplemented
        return self._terms == other._terms

    def __neg__(self) -> TabloidExpr:
        return TabloidExpr._make({t: -c for t, c in self._terms.items()})

    def __add__(self, other: TabloidExpr) -> TabloidExpr:
        if not isinstance(other, TabloidExpr):
            return NotImplemented
        out = dict(self._terms)
        for t, c in other._terms.items():
            v = out.get(t, _F0) + c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return TabloidExpr._make(out)

    def __sub__(self, other: TabloidExpr) -> TabloidExpr:
        return self + (-other)

    def __mul__(self, other) -> TabloidExpr:
        c = other if isinstance(other, Fraction) else Fraction(other)
        if not c:
            return TabloidExpr._make({})
        return TabloidExpr._make({t: c * v for t, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TabloidExpr({render_expr(self)})"


def render_tableau(t: Tableau) -> str:
    """Text form `[a b c / d e]`; a single-row filling prints `[a b c /]`."""
    r1 = " ".join(map(str, t.row1))
    if not t.row2:
        return f"[{r1} /]"
    return f"[{r1} / {' '.join(map(str, t.row2))}]"


def render_expr(e: TabloidExpr) -> str:
    """Signed sum of tableau forms, `0` for the zero expression."""
    if e.is_zero:
        return "0"
    parts: list[str] = []
    for t, c in e.terms():
        mag = abs(c)
        txt = render_tableau(t) if mag == 1 else f"{mag}*{render_tableau(t)}"
        if not parts:
            parts.append(f"-{txt}" if c < 0 else txt)
        else:
            parts.append((" - " if c < 0 else " + ") + txt)
    return "".join(parts)


def _swapped(u: Tableau, pos_a: tuple[int, int], pos_b: tuple[int, int]) -> Tableau:
    # Positions are (row, index) with row in {1, 2} and 0-based index.
    rows = [list(u.row1), list(u.row2)]
    (ra, ia), (rb, ib) = pos_a, pos_b
    rows[ra - 1][ia], rows[rb - 1][ib] = rows[rb - 1][ib], rows[ra - 1][ia]
    return Tableau(u.shape, tuple(rows[0]), tuple(rows[1]))


def garnir(u: Tableau, c: int) -> TabloidExpr:
    """The adjacent-column relation at columns c, c+1 (1-based), canonicalized.

    For c <= lambda2 the top entry of column c+1 is exchanged in turn with the
    two entries of column c and the result is q - q_1 - q_2; past the second
    row it is the two-term swap q - q_3.  Every such element maps to zero in
    the two-row quotient.
    """
    shape = u.shape
    if not 1 <= c <= shape.lambda1 - 1:
        raise ValueError(f"column must lie in 1..{shape.lambda1 - 1}, got {c}")
    i = c - 1
    terms: list[tuple[Tableau, int]] = [(u, 1)]
    if c <= shape.lambda2:
        terms.append((_swapped(u, (1, i + 1), (1, i)), -1))
        terms.append((_swapped(u, (1, i + 1), (2, i)), -1))
    else:
        terms.append((_swapped(u, (1, i), (1, i + 1)), -1))
    return TabloidExpr(terms)


def _leftmost_violation(t: Tableau) -> tuple[int, int] | None:
    # Returns (column c, offending row) for the leftmost descent of a
    # canonical tableau, or None when the tableau is standard.
    r1, r2 = t.row1, t.row2
    lambda2 = t.shape.lambda2
    for c in range(1, t.shape.lambda1):
        if r1[c - 1] > r1[c]:
            return c, 1
        if c < lambda2 and r2[c - 1] > r2[c]:
            return c, 2
    return None


def _rewrite_step(t: Tableau, c: int, row: int) -> list[tuple[Tableau, int]]:
    # Expand the canonical tableau t across its descent at columns (c, c+1).
    #
    # A first-row descent uses the relation of `garnir`: the top of column
    # c+1 exchanges with each entry of column c.  A second-row descent needs
    # the mirrored relation (bottom of column c against each entry of column
    # c+1): the top-exchange relation alone sends these tabloids back and
    # forth without progress.
    i = c - 1
    lambda2 = t.shape.lambda2
    if row == 1:
        if c <= lambda2:
            raw = [
                _swapped(t, (1, i + 1), (1, i)),
                _swapped(t, (1, i + 1), (2, i)),
            ]
        else:
            raw = [_swapped(t, (1, i), (1, i + 1))]
    else:
        raw = [
            _swapped(t, (2, i), (1, i + 1)),
            _swapped(t, (2, i), (2, i + 1)),
        ]
    out = []
    for u in raw:
        q = canonicalize(u)
        out.append((q.tableau, q.sign))
    return out


def straighten(e: TabloidExpr, fuel: int = 10**6) -> TabloidExpr:
    """Rewrite an expression modulo the adjacent-column relations until every
    surviving tabloid is standard.

    Integer inputs produce integer outputs.  The fuel counter bounds the
    number of rewrites; exhausting it signals a non-termination bug and is
    never expected.
    """
    memo: dict[Tableau, dict[Tableau, Fraction]] = {}
    budget = fuel

    def expand(tab: Tableau) -> dict[Tableau, Fraction]:
        nonlocal budget
        hit = memo.get(tab)
        if hit is not None:
            return hit
        violation = _leftmost_violation(tab)
        if violation is None:
            result = {tab: _F1}
            memo[tab] = result
            return result
        if budget <= 0:
            raise RuntimeError("straightening fuel exhausted")
        budget -= 1
        acc: dict[Tableau, Fraction] = {}
        for t2, sgn in _rewrite_step(tab, *violation):
            for std, coeff in expand(t2).items():
                v = acc.get(std, _F0) + sgn * coeff
                if v:
                    acc[std] = v
                else:
                    acc.pop(std, None)
        memo[tab] = acc
        return acc

    out: dict[Tableau, Fraction] = {}
    for tab, coeff in e.terms():
        for std, unit in expand(tab).items():
            v = out.get(std, _F0) + coeff * unit
            if v:
                out[std] = v
            else:
                out.pop(std, None)
    return TabloidExpr._make(out)


def trade_map(q: Tabloid, k: int) -> BooleanElement:
    """Signed total trade read off the columns of a two-row tabloid.

    The height-2 columns give the pairs (x_i, y_i); the single-row tail of
    the tableau is ignored, matching the sum over all possible tails.
    """
    shape = q.tableau.shape
    if shape.lambda2 == 0:
        raise ValueError("the trade map needs a shape with a second row")
    t = shape.lambda2 - 1
    n = shape.n
    if not t < k:
        raise ValueError(f"need k > {t} for shape ({shape.lambda1}, {shape.lambda2})")
    if t + k > n:
        raise ValueError(f"need t + k <= n, got t={t} k={k} n={n}")
    spec = TradeSpec(n, t, k, q.tableau.row1[: t + 1], q.tableau.row2)
    return q.sign * total_trade(spec)


def trade_map_expr(e: TabloidExpr, k: int) -> BooleanElement:
    """Linear extension of the trade map to tabloid expressions."""
    terms = e.terms()
    if not terms:
        raise ValueError("cannot infer the ground set of an empty expression")
    out = BooleanElement.zero(terms[0][0].shape.n)
    for tab, coeff in terms:
        out = out + coeff * trade_map(Tabloid(tab, 1), k)
    return out
