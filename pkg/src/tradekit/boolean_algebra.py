"""The rational subset algebra on {1..n} and its grade-k pieces.

An element is a finitely supported rational combination of subsets; the
product of two basis subsets is their union, with the empty set as identity.
Grade-k elements are coordinate vectors over the k-subsets in colex order.
The module also builds the inclusion/intersection incidence matrices between
grade pieces and computes the alternating-sum coefficients that predict the
rank of any rational combination of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .combinatorics import Permutation, Subset, binomial, colex_rank, colex_tuples
from .linalg import RationalMatrix, Vector

_F0 = Fraction(0)
_F1 = Fraction(1)

INCLUSION = "inclusion"
INTERSECTION = "intersection"
COMBINATION = "combination"


class BooleanElement:
    """A finitely supported rational combination of subsets of {1..n}."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Fraction] = {}
        for subset, coeff in items:
            key = subset.elements if isinstance(subset, Subset) else tuple(subset)
            prev = 0
            for e in key:
                if not prev < e <= n:
                    raise ValueError(f"bad subset {key} for ground set 1..{n}")
                prev = e
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            acc[key] = acc.get(key, _F0) + c
        self.n = n
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _make(cls, n: int, terms: dict[tuple[int, ...], Fraction]) -> BooleanElement:
        # Fast path for internal callers that guarantee clean terms.
        self = cls.__new__(cls)
        self.n = n
        self._terms = terms
        return self

    @classmethod
    def zero(cls, n: int) -> BooleanElement:
        return cls._make(n, {})

    @classmethod
    def one(cls, n: int) -> BooleanElement:
        """The multiplicative identity: the empty set with coefficient 1."""
        return cls._make(n, {(): _F1})

    @classmethod
    def term(cls, n: int, elements: Iterable[int], coeff=1) -> BooleanElement:
        return cls(n, [(tuple(elements), coeff)])

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, subset: Subset | Iterable[int]) -> Fraction:
        key = subset.elements if isinstance(subset, Subset) else tuple(subset)
        return self._terms.get(key, _F0)

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Term list sorted by (grade, colex rank)."""
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), colex_rank(kv[0])))

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({len(s) for s in self._terms}))

    def homogeneous_grade(self) -> int:
        """The common grade of all terms; raises on mixed or zero elements."""
        gs = self.grades()
        if len(gs) != 1:
            raise ValueError(f"element is not homogeneous (grades {gs})")
        return gs[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __neg__(self) -> BooleanElement:
        return BooleanElement._make(self.n, {s: -c for s, c in self._terms.items()})

    def __add__(self, other: BooleanElement) -> BooleanElement:
        if not isinstance(other, BooleanElement):
            return NotImplemented
        self._require_same_n(other)
        out = dict(self._terms)
        for s, c in other._terms.items():
            v = out.get(s, _F0) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return BooleanElement._make(self.n, out)

    def __sub__(self, other: BooleanElement) -> BooleanElement:
        return self + (-other)

    def __mul__(self, other) -> BooleanElement:
        if isinstance(other, BooleanElement):
            self._require_same_n(other)
            out: dict[tuple[int, ...], Fraction] = {}
            for sa, ca in self._terms.items():
                for sb, cb in other._terms.items():
                    if not sb:
                        key = sa
                    elif not sa:
                        key = sb
                    else:
                        key = tuple(sorted({*sa, *sb}))
                    prev = out.get(key)
                    out[key] = ca * cb if prev is None else prev + ca * cb
            return BooleanElement._make(self.n, {k: v for k, v in out.items() if v})
        try:
            c = other if isinstance(other, Fraction) else Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return BooleanElement.zero(self.n)
        return BooleanElement._make(self.n, {s: c * v for s, v in self._terms.items()})

    __rmul__ = __mul__

    def _require_same_n(self, other: BooleanElement) -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched ground sets: {self.n} != {other.n}")

    def __repr__(self) -> str:
        return f"BooleanElement({self.n}, {render_element(self)})"


def product(a: BooleanElement, b: BooleanElement) -> BooleanElement:
    """Union-product: coefficients of coinciding unions accumulate."""
    return a * b


def grade(e: BooleanElement, m: int) -> BooleanElement:
    """Restriction of e to terms whose subset has exactly m elements."""
    return BooleanElement._make(e.n, {s: c for s, c in e._terms.items() if len(s) == m})


def subset_sum(subset: Subset, m: int) -> BooleanElement:
    """Sum of all m-subsets of the given set, each with coefficient 1.

    By convention the m = 0 sum is the identity and the sum is zero as soon
    as m exceeds the number of available elements.
    """
    if m < 0:
        raise ValueError(f"subset size must be nonnegative, got {m}")
    if m == 0:
        return BooleanElement.one(subset.n)
    if m > len(subset):
        return BooleanElement.zero(subset.n)
    return BooleanElement._make(subset.n, {c: _F1 for c in combinations(subset.elements, m)})


def deletion_sum(e: BooleanElement, steps: int) -> BooleanElement:
    """Deletion sum: each grade-k term maps to the sum of its (k - steps)-subsets.

    Requires a homogeneous element; equals applying the inclusion matrix
    between the two grades.
    """
    if e.is_zero:
        return e
    k = e.homogeneous_grade()
    if not 0 <= steps <= k:
        raise ValueError(f"steps must lie in 0..{k}, got {steps}")
    target = k - steps
    out: dict[tuple[int, ...], Fraction] = {}
    for s, c in e._terms.items():
        for t in combinations(s, target):
            prev = out.get(t)
            out[t] = c if prev is None else prev + c
    return BooleanElement._make(e.n, {s: c for s, c in out.items() if c})


def permute_element(sigma: Permutation, e: BooleanElement) -> BooleanElement:
    """Apply a permutation of the ground set to every term, keeping coefficients."""
    if sigma.n != e.n:
        raise ValueError(f"mismatched ground sets: {sigma.n} != {e.n}")
    return BooleanElement._make(
        e.n, {tuple(sorted(sigma(x) for x in s)): c for s, c in e._terms.items()}
    )


def element_to_vector(e: BooleanElement, k: int) -> Vector:
    """Coordinates of a grade-k element over the k-subsets in colex order."""
    v = [_F0] * binomial(e.n, k)
    for s, c in e._terms.items():
        if len(s) != k:
            raise ValueError(f"element has a term of grade {len(s)}, expected {k}")
        v[colex_rank(s)] = c
    return tuple(v)


def render_element(e: BooleanElement) -> str:
    """Signed-sum text form, terms sorted by (grade, colex rank); zero is `0`.

    Coefficients of magnitude one are suppressed, the empty set prints `{}`.
    """
    if e.is_zero:
        return "0"
    parts: list[str] = []
    for s, c in e.terms():
        body = "{" + ",".join(map(str, s)) + "}"
        mag = abs(c)
        txt = body if mag == 1 else f"{mag}*{body}"
        if not parts:
            parts.append(f"-{txt}" if c < 0 else txt)
        else:
            parts.append((" - " if c < 0 else " + ") + txt)
    return "".join(parts)


@dataclass(frozen=True)
class MatrixSpec:
    """Parameters of an incidence matrix between the grade-t and grade-k pieces."""

    n: int
    t: int
    k: int
    kind: str
    l: int | None = None
    coeffs: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.t <= self.k <= self.n:
            raise ValueError(f"need 0 <= t <= k <= n, got t={self.t} k={self.k} n={self.n}")
        if self.kind == INCLUSION:
            if self.l is not None or self.coeffs is not None:
                raise ValueError("inclusion takes neither l nor coeffs")
        elif self.kind == INTERSECTION:
            if self.coeffs is not None:
                raise ValueError("intersection takes no coeffs")
            if self.l is None or not 0 <= self.l <= self.t:
                raise ValueError(f"intersection needs 0 <= l <= t, got l={self.l}")
        elif self.kind == COMBINATION:
            if self.l is not None:
                raise ValueError("combination takes no l")
            if self.coeffs is None or len(self.coeffs) != self.t + 1:
                raise ValueError(f"combination needs exactly t+1={self.t + 1} coefficients")
            object.__setattr__(
                self,
                "coeffs",
                tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs),
            )
        else:
            raise ValueError(f"unknown matrix kind {self.kind!r}")

    @classmethod
    def inclusion(cls, n: int, t: int, k: int) -> MatrixSpec:
        return cls(n, t, k, INCLUSION)

    @classmethod
    def intersection(cls, n: int, t: int, k: int, l: int) -> MatrixSpec:
        return cls(n, t, k, INTERSECTION, l=l)

    @classmethod
    def combination(cls, n: int, t: int, k: int, coeffs: Iterable) -> MatrixSpec:
        return cls(n, t, k, COMBINATION, coeffs=tuple(coeffs))


def _mask(elements: tuple[int, ...]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def build_matrix(spec: MatrixSpec) -> RationalMatrix:
    """Incidence matrix with C(n,t) rows and C(n,k) columns in colex order.

    Entries: inclusion [A ⊆ B]; intersection [|A ∩ B| = l]; combination
    puts coefficient c_l at every cell with |A ∩ B| = l.
    """
    row_masks = [_mask(s) for s in colex_tuples(spec.t, spec.n)]
    col_masks = [_mask(s) for s in colex_tuples(spec.k, spec.n)]
    rows: list[list[Fraction]] = []
    if spec.kind == INCLUSION:
        for a in row_masks:
            rows.append([_F1 if a & b == a else _F0 for b in col_masks])
    elif spec.kind == INTERSECTION:
        l = spec.l
        for a in row_masks:
            rows.append([_F1 if (a & b).bit_count() == l else _F0 for b in col_masks])
    else:
        coeffs = spec.coeffs
        for a in row_masks:
            rows.append([coeffs[(a & b).bit_count()] for b in col_masks])
    return RationalMatrix(rows, len(col_masks))


def lambda_coeff(t: int, k: int, n: int, l: int, j: int) -> int:
    """Alternating binomial sum deciding which isotypic blocks survive.

    lambda_j(t,k,n;l) = sum_s (-1)^(j-s) C(j,s) C(k-s,l-s) C(n-k-j+s,t-l-j+s),
    evaluated with the vanishing binomial convention.
    """
    if not 0 <= l <= t:
        raise ValueError(f"need 0 <= l <= t, got l={l} t={t}")
    if not 0 <= j <= t:
        raise ValueError(f"need 0 <= j <= t, got j={j} t={t}")
    return sum(
        (-1) ** (j - s)
        * binomial(j, s)
        * binomial(k - s, l - s)
        * binomial(n - k - j + s, t - l - j + s)
        for s in range(j + 1)
    )


def _check_rank_domain(t: int, k: int, n: int) -> None:
    if not (0 <= t <= k and 2 * k <= n):
        raise ValueError(f"rank prediction needs t <= k <= n/2, got t={t} k={k} n={n}")


def j_set(t: int, k: int, n: int, coeffs: Iterable) -> set[int]:
    """Indices j in 0..t whose combined coefficient sum_l c_l*lambda_j(t,k,n;l)
    is nonzero; these are the isotypic blocks surviving in the image.

    The whole linear combination must be tested: mixed-sign lambda values let
    coefficient vectors cancel a block even when every c_l is nonzero (for
    t=1, k=2, n=5 the vector (1, 1) produces the all-ones matrix of rank 1).
    """
    _check_rank_domain(t, k, n)
    cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
    if len(cs) != t + 1:
        raise ValueError(f"need exactly t+1={t + 1} coefficients, got {len(cs)}")
    return {
        j
        for j in range(t + 1)
        if sum(c * lambda_coeff(t, k, n, l, j) for l, c in enumerate(cs))
    }


def predicted_rank(t: int, k: int, n: int, coeffs: Iterable) -> int:
    """Predicted rank of sum_l c_l * (intersection matrix at l): a sum of
    consecutive-binomial differences over the surviving indices."""
    return sum(binomial(n, j) - binomial(n, j - 1) for j in j_set(t, k, n, coeffs))
