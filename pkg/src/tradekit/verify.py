"""Claim-verification harness.

Every check pairs a predicted quantity (closed formula or dimension count)
with a value computed independently by exact row reduction, and reports both.
Randomness is always seeded from the check's own parameters so reruns are
reproducible.
"""

from __future__ import annotations

import hashlib
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import Callable, Iterable, Iterator, Sequence

from .boolean_algebra import (
    BooleanElement,
    MatrixSpec,
    build_matrix,
    element_to_vector,
    lambda_coeff,
    predicted_rank,
)
from .combinatorics import Permutation, binomial, colex_rank, colex_tuples
from .linalg import IntegerEchelon, rank_of_columns
from .specht import TwoRowShape, specht_dim
from .trades import (
    TradeSpec,
    all_total_trades,
    is_t_trade,
    minimal_trade,
    total_trade,
    total_trade_basis,
    total_trade_specs,
)


class VerificationError(RuntimeError):
    """An internal consistency assertion of a check failed."""


def _fmt_param(value) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


def _params_str(params: dict) -> str:
    return ",".join(f"{k}={_fmt_param(v)}" for k, v in params.items())


@dataclass
class RankReport:
    """Outcome of one rank/dimension check: pass iff predicted == computed."""

    claim: str
    params: dict
    predicted: int
    computed: int
    elapsed_ms: int = 0
    asserted: bool = True

    @property
    def passed(self) -> bool:
        return self.predicted == self.computed

    def line(self) -> str:
        return (
            f"CHECK {self.claim} params={_params_str(self.params)} "
            f"predicted={self.predicted} computed={self.computed} "
            f"pass={'true' if self.passed else 'false'} ms={self.elapsed_ms}"
        )


@dataclass
class DecompositionReport:
    """Outcome of a direct-sum check: per-summand dimensions, containment
    flags, and the matching of the total against the row-reduction value."""

    claim: str
    params: dict
    summands: list[tuple[tuple[int, int], int, int]]  # (shape, predicted, computed)
    containment: list[bool]
    predicted_total: int
    computed_total: int
    consistent: bool = True
    elapsed_ms: int = 0
    asserted: bool = True
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            all(p == c for _, p, c in self.summands)
            and all(self.containment)
            and self.predicted_total == self.computed_total
            and self.consistent
        )

    def line(self) -> str:
        return (
            f"CHECK {self.claim} params={_params_str(self.params)} "
            f"predicted={self.predicted_total} computed={self.computed_total} "
            f"pass={'true' if self.passed else 'false'} ms={self.elapsed_ms}"
        )


Report = RankReport | DecompositionReport


def _seed_from(*parts) -> int:
    digest = hashlib.sha256(repr(parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _basis_unit(coeff_index: int, t: int) -> tuple[int, ...]:
    return tuple(1 if l == coeff_index else 0 for l in range(t + 1))


def check_inclusion_rank(t: int, k: int, n: int) -> RankReport:
    """Inclusion matrix between grades t and k has full row rank C(n, t)."""
    if not (0 <= t < k and 2 * k <= n):
        raise ValueError(f"need t < k <= n/2, got t={t} k={k} n={n}")
    start = time.perf_counter()
    computed = build_matrix(MatrixSpec.inclusion(n, t, k)).rank()
    return RankReport(
        "inclusion-rank",
        {"t": t, "k": k, "n": n},
        predicted=binomial(n, t),
        computed=computed,
        elapsed_ms=_ms(start),
    )


def check_total_trade_dim(t: int, k: int, n: int) -> RankReport:
    """Span of all total trades has dimension C(n, t+1) - C(n, t)."""
    if not 0 <= t < k:
        raise ValueError(f"need 0 <= t < k, got t={t} k={k}")
    if t + k > n:
        raise ValueError(f"need t + k <= n, got t={t} k={k} n={n}")
    start = time.perf_counter()
    computed = rank_of_columns(
        element_to_vector(e, k) for e in all_total_trades(t, k, n)
    )
    return RankReport(
        "total-trade-dim",
        {"t": t, "k": k, "n": n},
        predicted=binomial(n, t + 1) - binomial(n, t),
        computed=computed,
        elapsed_ms=_ms(start),
    )


def check_kernel_decomposition(t: int, k: int, n: int) -> DecompositionReport:
    """The t-trade space splits into the total-trade strata i = t..k-1.

    Checks stratum-by-stratum kernel membership, dimensions, and that the
    concatenated bases are independent and fill the whole null space.
    """
    if not (0 <= t < k and 2 * k <= n):
        raise ValueError(f"need t < k <= n/2, got t={t} k={k} n={n}")
    start = time.perf_counter()
    w = build_matrix(MatrixSpec.inclusion(n, t, k))
    kernel_dim = binomial(n, k) - w.rank()
    summands = []
    containment = []
    all_vectors = []
    for i in range(t, k):
        vectors = [element_to_vector(e, k) for _, e in total_trade_basis(i, k, n)]
        in_kernel = all(all(x == 0 for x in w.matvec(v)) for v in vectors)
        summands.append(
            ((n - i - 1, i + 1), specht_dim(TwoRowShape(n - i - 1, i + 1)), rank_of_columns(vectors))
        )
        containment.append(in_kernel)
        all_vectors.extend(vectors)
    concat_rank = rank_of_columns(all_vectors)
    predicted_total = binomial(n, k) - binomial(n, t)
    consistent = (
        concat_rank == sum(c for _, _, c in summands) and kernel_dim == predicted_total
    )
    return DecompositionReport(
        "kernel-decomposition",
        {"t": t, "k": k, "n": n},
        summands=summands,
        containment=containment,
        predicted_total=predicted_total,
        computed_total=concat_rank,
        consistent=consistent,
        elapsed_ms=_ms(start),
        extras={"kernel_dim": kernel_dim},
    )


def check_intersection_rank(t: int, k: int, n: int, l: int) -> RankReport:
    """Rank of the single intersection matrix at overlap l matches the prediction."""
    if not (0 <= t <= k and 2 * k <= n):
        raise ValueError(f"need t <= k <= n/2, got t={t} k={k} n={n}")
    if not 0 <= l <= t:
        raise ValueError(f"need 0 <= l <= t, got l={l}")
    start = time.perf_counter()
    coeffs = _basis_unit(l, t)
    computed = build_matrix(MatrixSpec.intersection(n, t, k, l)).rank()
    return RankReport(
        "intersection-rank",
        {"t": t, "k": k, "n": n, "l": l},
        predicted=predicted_rank(t, k, n, coeffs),
        computed=computed,
        elapsed_ms=_ms(start),
    )


def _random_coeffs(rng: random.Random, t: int) -> tuple[Fraction, ...]:
    while True:
        cs = tuple(
            Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(t + 1)
        )
        if any(cs):
            return cs


def check_combination_rank(
    t: int,
    k: int,
    n: int,
    coeffs: Sequence | None = None,
    seeds: int = 20,
    seed: int = 0,
    adversarial: bool = True,
) -> list[RankReport]:
    """Predicted vs computed rank for rational combinations of the intersection
    matrices.

    With no explicit coefficients this runs `seeds` seeded random vectors plus
    the adversarial grid {-2,-1,1,2}^(t+1), whose sign patterns can silence
    individual isotypic blocks.
    """
    if not (0 <= t < k and 2 * k <= n):
        raise ValueError(f"need t < k <= n/2, got t={t} k={k} n={n}")
    if coeffs is not None:
        vectors = [tuple(Fraction(c) for c in coeffs)]
    else:
        rng = random.Random(_seed_from("combination", t, k, n, seed))
        vectors = [_random_coeffs(rng, t) for _ in range(seeds)]
        if adversarial:
            vectors.extend(
                tuple(Fraction(c) for c in grid)
                for grid in iter_product((-2, -1, 1, 2), repeat=t + 1)
            )
    reports = []
    for cs in vectors:
        start = time.perf_counter()
        computed = build_matrix(MatrixSpec.combination(n, t, k, cs)).rank()
        reports.append(
            RankReport(
                "combination-rank",
                {"t": t, "k": k, "n": n, "coeffs": cs},
                predicted=predicted_rank(t, k, n, cs),
                computed=computed,
                elapsed_ms=_ms(start),
            )
        )
    return reports


def literal_basis_specs(t: int, k: int, n: int) -> list[TradeSpec]:
    """Total-trade specs satisfying only the three sortedness conditions:
    xs increasing, ys increasing, and x_i < y_i columnwise."""
    return [
        spec
        for spec in total_trade_specs(t, k, n)
        if all(spec.ys[i] < spec.ys[i + 1] for i in range(t))
    ]


def check_trade_basis(t: int, k: int, n: int) -> DecompositionReport:
    """Audit the two candidate bases of the total-trade span.

    The standard-filling basis is asserted (cardinality, independence,
    spanning).  The literal three-condition set is measured and reported only;
    for small parameters it is strictly larger than the span's dimension.
    """
    start = time.perf_counter()
    basis = total_trade_basis(t, k, n)
    dim = specht_dim(TwoRowShape(n - t - 1, t + 1))
    vectors = [element_to_vector(e, k) for _, e in basis]
    basis_rank = rank_of_columns(vectors)
    span_rank = rank_of_columns(
        element_to_vector(e, k) for e in all_total_trades(t, k, n)
    )
    literal = literal_basis_specs(t, k, n)
    literal_rank = rank_of_columns(
        element_to_vector(total_trade(s), k) for s in literal
    )
    return DecompositionReport(
        "basis-standard",
        {"t": t, "k": k, "n": n},
        summands=[((n - t - 1, t + 1), dim, basis_rank)],
        containment=[span_rank == basis_rank],
        predicted_total=dim,
        computed_total=basis_rank,
        consistent=len(basis) == dim,
        elapsed_ms=_ms(start),
        extras={
            "span_rank": span_rank,
            "literal_cardinality": len(literal),
            "literal_rank": literal_rank,
        },
    )


def literal_basis_audit(t: int, k: int, n: int) -> RankReport:
    """Report-only comparison of the literal three-condition set's rank with
    the span dimension; never asserted."""
    start = time.perf_counter()
    literal = literal_basis_specs(t, k, n)
    literal_rank = rank_of_columns(
        element_to_vector(total_trade(s), k) for s in literal
    )
    report = RankReport(
        "basis-literal-audit",
        {"t": t, "k": k, "n": n, "cardinality": len(literal)},
        predicted=specht_dim(TwoRowShape(n - t - 1, t + 1)),
        computed=literal_rank,
        elapsed_ms=_ms(start),
        asserted=False,
    )
    return report


def _grade_index_map(sigma: Permutation, k: int) -> list[int]:
    # Index permutation of grade-k coordinates: position i receives the
    # coefficient sitting at sigma^{-1}(subset_i); transpositions are
    # self-inverse and those are the only generators used here.
    return [
        colex_rank(tuple(sorted(sigma(x) for x in s)))
        for s in colex_tuples(k, sigma.n)
    ]


def orbit_span(e: BooleanElement, k: int) -> IntegerEchelon:
    """Span of the symmetric-group orbit of a grade-k element, computed by
    closing under adjacent transpositions until the rank stabilizes."""
    n = e.n
    dim = binomial(n, k)
    maps = [_grade_index_map(g, k) for g in Permutation.adjacent_transpositions(n)]
    ech = IntegerEchelon(dim)
    v0 = list(element_to_vector(e, k))
    ech.add(v0)
    pending = [v0]
    while pending:
        fresh = []
        for v in pending:
            for m in maps:
                w = [v[m[i]] for i in range(dim)]
                if ech.add(w):
                    fresh.append(w)
        pending = fresh
    return ech


def orbit_decomposition(e: BooleanElement, t: int) -> set[int]:
    """Strata indices i with the whole total-trade stratum inside the orbit span.

    Also asserts that the strata found account exactly for the span's
    dimension; a mismatch raises VerificationError.
    """
    if e.is_zero:
        raise ValueError("the zero element has no orbit decomposition")
    k = e.homogeneous_grade()
    n = e.n
    if not (0 <= t < k and 2 * k <= n):
        raise ValueError(f"need t < k <= n/2, got t={t} k={k} n={n}")
    if not is_t_trade(e, t):
        raise ValueError(f"element is not a {t}-trade")
    ech = orbit_span(e, k)
    strata = set()
    total = 0
    for i in range(t, k):
        vectors = [element_to_vector(b, k) for _, b in total_trade_basis(i, k, n)]
        if all(ech.contains(v) for v in vectors):
            strata.add(i)
            total += binomial(n, i + 1) - binomial(n, i)
    if ech.rank != total:
        raise VerificationError(
            f"orbit span dimension {ech.rank} != {total}, the total over strata {sorted(strata)}"
        )
    return strata


def check_graver_jurkat(t: int, k: int, n: int, seed: int = 0) -> RankReport:
    """The orbit of one random minimal trade spans the whole t-trade space."""
    if not (0 <= t < k and 2 * k <= n):
        raise ValueError(f"need t < k <= n/2, got t={t} k={k} n={n}")
    start = time.perf_counter()
    rng = random.Random(_seed_from("graver-jurkat", t, k, n, seed))
    chosen = rng.sample(range(1, n + 1), t + k + 1)
    spec = TradeSpec(
        n,
        t,
        k,
        tuple(chosen[: t + 1]),
        tuple(chosen[t + 1 : 2 * t + 2]),
        tuple(chosen[2 * t + 2 :]),
    )
    ech = orbit_span(minimal_trade(spec), k)
    return RankReport(
        "graver-jurkat",
        {"t": t, "k": k, "n": n, "seed": seed},
        predicted=binomial(n, k) - binomial(n, t),
        computed=ech.rank,
        elapsed_ms=_ms(start),
    )


def _random_total_spec(rng: random.Random, t: int, k: int, n: int) -> TradeSpec:
    chosen = rng.sample(range(1, n + 1), 2 * (t + 1))
    return TradeSpec(n, t, k, tuple(chosen[: t + 1]), tuple(chosen[t + 1 :]))


def check_orbit_witness(t: int, k: int, n: int, kind: str, seed: int = 0) -> RankReport:
    """Orbit-span dimension for a constructed witness with known strata.

    kind `total`: one total trade, strata {t}; `minimal`: one minimal trade,
    strata {t..k-1}; `mixed`: a t-total plus a (t+1)-total trade, strata
    {t, t+1} (needs k >= t+2).
    """
    if not (0 <= t < k and 2 * k <= n):
        raise ValueError(f"need t < k <= n/2, got t={t} k={k} n={n}")
    rng = random.Random(_seed_from("orbit", kind, t, k, n, seed))
    start = time.perf_counter()
    if kind == "total":
        e = total_trade(_random_total_spec(rng, t, k, n))
        expected = {t}
    elif kind == "minimal":
        chosen = rng.sample(range(1, n + 1), t + k + 1)
        e = minimal_trade(
            TradeSpec(
                n,
                t,
                k,
                tuple(chosen[: t + 1]),
                tuple(chosen[t + 1 : 2 * t + 2]),
                tuple(chosen[2 * t + 2 :]),
            )
        )
        expected = set(range(t, k))
    elif kind == "mixed":
        if k < t + 2:
            raise ValueError(f"mixed witness needs k >= t+2, got t={t} k={k}")
        e = total_trade(_random_total_spec(rng, t, k, n)) + total_trade(
            _random_total_spec(rng, t + 1, k, n)
        )
        expected = {t, t + 1}
    else:
        raise ValueError(f"unknown witness kind {kind!r}")
    strata = orbit_decomposition(e, t)
    computed = sum(binomial(n, i + 1) - binomial(n, i) for i in strata)
    return RankReport(
        f"orbit-{kind}",
        {"t": t, "k": k, "n": n, "strata": tuple(sorted(strata))},
        predicted=sum(binomial(n, i + 1) - binomial(n, i) for i in expected),
        computed=computed,
        elapsed_ms=_ms(start),
    )


def check_lambda_closed_form(bound: int) -> RankReport:
    """lambda_j(t,k,n;t) collapses to the single binomial C(k-j, t-j);
    checked exhaustively for 0 <= j <= t <= k <= n <= bound."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    start = time.perf_counter()
    cases = 0
    matches = 0
    for n in range(bound + 1):
        for k in range(n + 1):
            for t in range(k + 1):
                for j in range(t + 1):
                    cases += 1
                    if lambda_coeff(t, k, n, t, j) == binomial(k - j, t - j):
                        matches += 1
    return RankReport(
        "lambda-closed-form",
        {"n_max": bound},
        predicted=cases,
        computed=matches,
        elapsed_ms=_ms(start),
    )


def _half_domain(n_max: int) -> Iterator[tuple[int, int, int]]:
    # (t, k, n) with t < k <= n/2, ascending.
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            for t in range(k):
                yield t, k, n


def _sum_domain(n_max: int) -> Iterator[tuple[int, int, int]]:
    # (t, k, n) with t < k and t + k <= n, ascending.
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            for t in range(min(k, n - k + 1)):
                yield t, k, n


SUITES = (
    "inclusion-rank",
    "total-trade-dim",
    "kernel-decomposition",
    "intersection-rank",
    "combination-rank",
    "basis",
    "graver-jurkat",
    "orbit-decomposition",
    "lambda-closed-form",
)


def _suite_tasks(selector: str, n_max: int, seed: int) -> list[Callable[[], list[Report]]]:
    tasks: list[Callable[[], list[Report]]] = []

    def one(fn, *args) -> Callable[[], list[Report]]:
        return lambda: [fn(*args)]

    if selector in ("inclusion-rank", "all"):
        for t, k, n in _half_domain(n_max):
            tasks.append(one(check_inclusion_rank, t, k, n))
    if selector in ("total-trade-dim", "all"):
        for t, k, n in _sum_domain(n_max):
            tasks.append(one(check_total_trade_dim, t, k, n))
    if selector in ("kernel-decomposition", "all"):
        for t, k, n in _half_domain(n_max):
            tasks.append(one(check_kernel_decomposition, t, k, n))
    if selector in ("intersection-rank", "all"):
        for t, k, n in _half_domain(n_max):
            for l in range(t + 1):
                tasks.append(one(check_intersection_rank, t, k, n, l))
    if selector in ("combination-rank", "all"):
        for t, k, n in _half_domain(n_max):
            tasks.append(
                (lambda t=t, k=k, n=n: check_combination_rank(t, k, n, seed=seed))
            )
    if selector in ("basis", "all"):
        for t, k, n in _sum_domain(n_max):
            if n - t - 1 >= t + 1:
                tasks.append(
                    (
                        lambda t=t, k=k, n=n: [
                            check_trade_basis(t, k, n),
                            literal_basis_audit(t, k, n),
                        ]
                    )
                )
    if selector in ("graver-jurkat", "all"):
        for t, k, n in _half_domain(n_max):
            tasks.append(one(check_graver_jurkat, t, k, n, seed))
    if selector in ("orbit-decomposition", "all"):
        for t, k, n in _half_domain(n_max):
            kinds = ["total", "minimal"] + (["mixed"] if k >= t + 2 else [])
            for kind in kinds:
                tasks.append(one(check_orbit_witness, t, k, n, kind, seed))
    if selector in ("lambda-closed-form", "all"):
        tasks.append(one(check_lambda_closed_form, n_max))
    if not tasks and selector not in SUITES + ("all",):
        raise ValueError(f"unknown suite {selector!r}")
    return tasks


def worker_count() -> int:
    """Worker cap from TRADEKIT_THREADS; all available cores when absent."""
    raw = os.environ.get("TRADEKIT_THREADS", "").strip()
    if raw:
        count = int(raw)
        if count < 1:
            raise ValueError(f"TRADEKIT_THREADS must be >= 1, got {raw!r}")
        return count
    return os.cpu_count() or 1


def run_suite(selector: str, n_max: int, seed: int = 0) -> list[Report]:
    """Run one suite (or `all`) over every admissible parameter tuple with
    n <= n_max; reports come back in deterministic parameter order."""
    tasks = _suite_tasks(selector, n_max, seed)
    workers = worker_count()
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            buckets = list(pool.map(lambda task: task(), tasks))
    else:
        buckets = [task() for task in tasks]
    return [report for bucket in buckets for report in bucket]


def render_reports(reports: Iterable[Report]) -> tuple[str, bool]:
    """Serialize reports plus the TOTAL summary; the flag is the exit verdict
    (asserted checks only)."""
    lines = []
    passed = 0
    total = 0
    ok = True
    for r in reports:
        lines.append(r.line())
        total += 1
        if r.passed:
            passed += 1
        elif r.asserted:
            ok = False
    lines.append(f"TOTAL pass={passed}/{total}")
    return "\n".join(lines) + "\n", ok
