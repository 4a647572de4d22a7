"""Product-form trades in the subset algebra.

A minimal trade multiplies signed pairs (x_i - y_i) by a fixed tail of extra
elements; a total trade replaces the fixed tail with the sum of all possible
tails from the leftover ground set.  Both are homogeneous grade-k elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .boolean_algebra import BooleanElement, deletion_sum, subset_sum
from .combinatorics import Permutation, Subset


@dataclass(frozen=True)
class TradeSpec:
    """Disjoint pairs (x_i, y_i), i = 1..t+1, plus an optional fixed tail.

    The tail is present for minimal trades (length k - t - 1) and absent for
    total trades.
    """

    n: int
    t: int
    k: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    tail: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", tuple(self.xs))
        object.__setattr__(self, "ys", tuple(self.ys))
        if self.tail is not None:
            object.__setattr__(self, "tail", tuple(self.tail))
        if not 0 <= self.t < self.k:
            raise ValueError(f"need 0 <= t < k, got t={self.t} k={self.k}")
        if self.t + self.k > self.n:
            raise ValueError(f"need t + k <= n, got t={self.t} k={self.k} n={self.n}")
        if len(self.xs) != self.t + 1 or len(self.ys) != self.t + 1:
            raise ValueError(f"need t+1={self.t + 1} xs and ys")
        if self.tail is not None and len(self.tail) != self.k - self.t - 1:
            raise ValueError(f"tail must have k-t-1={self.k - self.t - 1} elements")
        used = self.xs + self.ys + (self.tail or ())
        if len(set(used)) != len(used):
            raise ValueError(f"xs, ys and tail must be pairwise distinct, got {used}")
        for e in used:
            if not 1 <= e <= self.n:
                raise ValueError(f"element {e} outside 1..{self.n}")


def _pair_product(spec: TradeSpec) -> BooleanElement:
    out = BooleanElement.one(spec.n)
    for x, y in zip(spec.xs, spec.ys):
        out = out * BooleanElement(spec.n, [((x,), 1), ((y,), -1)])
    return out


def minimal_trade(spec: TradeSpec) -> BooleanElement:
    """(x_1-y_1)...(x_{t+1}-y_{t+1}) x_{t+2}...x_k with the spec's fixed tail."""
    if spec.tail is None:
        raise ValueError("minimal trade requires a tail")
    out = _pair_product(spec)
    for z in spec.tail:
        out = out * BooleanElement.term(spec.n, (z,))
    return out


def total_trade(spec: TradeSpec) -> BooleanElement:
    """Pair product times the sum of all (k-t-1)-subsets of the unused elements."""
    if spec.tail is not None:
        raise ValueError("total trade takes no tail")
    used = set(spec.xs) | set(spec.ys)
    rest = tuple(x for x in range(1, spec.n + 1) if x not in used)
    return _pair_product(spec) * subset_sum(Subset(spec.n, rest), spec.k - spec.t - 1)


def is_t_trade(e: BooleanElement, t: int) -> bool:
    """True iff the deletion sum down to grade t vanishes."""
    if e.is_zero:
        return True
    k = e.homogeneous_grade()
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= grade {k}, got t={t}")
    return deletion_sum(e, k - t).is_zero


def trade_strength(e: BooleanElement) -> int | None:
    """Largest t <= k-1 for which e is a t-trade; None if not even a 0-trade.

    A t-trade is automatically an s-trade for every s <= t, so scanning from
    k-1 downward returns at the first hit.
    """
    if e.is_zero:
        raise ValueError("the zero element has no trade strength")
    k = e.homogeneous_grade()
    for t in range(k - 1, -1, -1):
        if is_t_trade(e, t):
            return t
    return None


def normalized(spec: TradeSpec) -> tuple[TradeSpec, int]:
    """Canonical sign-equivalent spec (x_i < y_i, pairs sorted by x) and the sign.

    Swapping a pair negates the trade; reordering pairs leaves it unchanged.
    """
    sign = 1
    pairs = []
    for x, y in zip(spec.xs, spec.ys):
        if x > y:
            x, y = y, x
            sign = -sign
        pairs.append((x, y))
    pairs.sort()
    out = TradeSpec(
        spec.n,
        spec.t,
        spec.k,
        tuple(x for x, _ in pairs),
        tuple(y for _, y in pairs),
        spec.tail,
    )
    return out, sign


def permute_spec(sigma: Permutation, spec: TradeSpec) -> TradeSpec:
    """Elementwise image of a spec; not normalized."""
    if sigma.n != spec.n:
        raise ValueError(f"mismatched ground sets: {sigma.n} != {spec.n}")
    return TradeSpec(
        spec.n,
        spec.t,
        spec.k,
        tuple(sigma(x) for x in spec.xs),
        tuple(sigma(y) for y in spec.ys),
        None if spec.tail is None else tuple(sigma(z) for z in spec.tail),
    )


def _matchings(elems: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    # Perfect matchings with x < y in each pair and pairs sorted by x: the
    # smallest remaining element always opens the next pair.
    if not elems:
        yield []
        return
    first = elems[0]
    for i in range(1, len(elems)):
        rest = elems[1:i] + elems[i + 1 :]
        for sub in _matchings(rest):
            yield [(first, elems[i])] + sub


def total_trade_specs(t: int, k: int, n: int) -> Iterator[TradeSpec]:
    """All pair-normalized total-trade specs: every choice of t+1 disjoint pairs."""
    if not 0 <= t < k:
        raise ValueError(f"need 0 <= t < k, got t={t} k={k}")
    if t + k > n:
        raise ValueError(f"need t + k <= n, got t={t} k={k} n={n}")
    for chosen in combinations(range(1, n + 1), 2 * (t + 1)):
        for pairs in _matchings(chosen):
            yield TradeSpec(
                n, t, k, tuple(x for x, _ in pairs), tuple(y for _, y in pairs)
            )


def all_total_trades(t: int, k: int, n: int) -> Iterator[BooleanElement]:
    """One total trade per normalized spec, in deterministic enumeration order."""
    return (total_trade(s) for s in total_trade_specs(t, k, n))


def total_trade_basis(t: int, k: int, n: int) -> list[tuple[TradeSpec, BooleanElement]]:
    """The canonical basis of the total-trade span, one trade per standard
    filling of the two-row shape (n-t-1, t+1).

    The three sortedness conditions (xs increasing, ys increasing, x_i < y_i)
    alone admit more specs than the span's dimension; standard fillings add
    the constraint that ties the last x to the unused elements, which cuts the
    list down to exactly C(n,t+1) - C(n,t) independent trades.
    """
    from .specht import TwoRowShape, standard_tableaux

    if not 0 <= t < k:
        raise ValueError(f"need 0 <= t < k, got t={t} k={k}")
    if t + k > n:
        raise ValueError(f"need t + k <= n, got t={t} k={k} n={n}")
    shape = TwoRowShape(n - t - 1, t + 1)
    out = []
    for tab in standard_tableaux(shape):
        spec = TradeSpec(n, t, k, tab.row1[: t + 1], tab.row2)
        out.append((spec, total_trade(spec)))
    return out


def render_spec(spec: TradeSpec) -> str:
    """Text form `xs=[..] ys=[..] tail=[..]`; the tail is omitted when absent."""
    xs = ",".join(map(str, spec.xs))
    ys = ",".join(map(str, spec.ys))
    out = f"xs=[{xs}] ys=[{ys}]"
    if spec.tail is not None:
        out += f" tail=[{','.join(map(str, spec.tail))}]"
    return out
