"""Empirical checks of the claims a MapInstance carries.

Measured suprema are lower bounds for true constants, so a claimed upper
bound can fail (measured above the claim, conclusive) or pass (evidence,
not proof).  Displacement estimates point the other way: they are upper
bounds for the minimal displacement, so a positive claimed bound passes
once some witness beats it, a zero bound can only be confirmed exactly
(otherwise the estimate is recorded report-only), and an absent bound is
always report-only.

Every check is deterministic given its seed; identical requests produce
identical results bit for bit.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .catalog import MapInstance
from .domains import as_rng
from .errors import (
    InvalidBudgetError,
    InvalidCheckError,
    InvalidParameterError,
    InvalidStrategyError,
    InsufficientSamplesError,
    DomainViolationError,
)
from .seqvec import SeqVec, distance, format_vec, norm, scale, axpy

__all__ = [
    "PAIR_CUTOFF",
    "RATIO_SLACK",
    "ORACLE_TOL",
    "HolderEstimate",
    "OrbitResult",
    "DisplacementEstimate",
    "CheckRequest",
    "CheckRecord",
    "estimate_holder_ratio",
    "check_invariance",
    "orbit",
    "estimate_displacement",
    "check_uniform_profile",
    "check_asymptotic_profile",
    "check_approx_fixed_set",
    "check_oracle",
    "run_check",
    "CHECK_KINDS",
]

PAIR_CUTOFF = 1e-13  # pairs closer than this are degenerate for ratios
RATIO_SLACK = 1e-9   # multiplicative slack on claimed constants
ORACLE_TOL = 1e-12
DISPLACEMENT_TOL = 1e-12

_STAR_SHAPED = ("ball", "positive_ball", "coefficient_box", "c_interval",
                "sub_simplex")


@dataclass(frozen=True)
class HolderEstimate:
    sup_ratio: float
    witness: tuple[SeqVec, SeqVec]
    pairs_used: int


@dataclass(frozen=True)
class OrbitResult:
    points: tuple[SeqVec, ...]
    displacements: tuple[float, ...]
    max_norm: float


@dataclass(frozen=True)
class DisplacementEstimate:
    value: float
    witness: SeqVec
    evaluations: int


def estimate_holder_ratio(T: MapInstance, pairs: int, seed: int,
                          iterate: int = 1,
                          exponent: float | None = None) -> HolderEstimate:
    """sup over sampled pairs of ||T^n x - T^n y|| / ||x - y||^exponent.

    The exponent defaults to the claimed one; pairs closer than PAIR_CUTOFF
    are skipped (the ratio is numerically meaningless there)."""
    if pairs < 1:
        raise InvalidBudgetError(f"pairs {pairs} is below 1")
    if iterate < 1:
        raise InvalidBudgetError(f"iterate {iterate} is below 1")
    a = T.claims.alpha if exponent is None else exponent
    rng = as_rng(seed)
    best = -1.0
    witness: tuple[SeqVec, SeqVec] | None = None
    used = 0
    for _ in range(pairs):
        x = T.domain.sample(rng)
        y = T.domain.sample(rng)
        d = distance(x, y, T.norm)
        if d < PAIR_CUTOFF:
            continue
        used += 1
        tx, ty = x, y
        for _ in range(iterate):
            tx = T.apply(tx)
            ty = T.apply(ty)
        ratio = distance(tx, ty, T.norm) / d ** a
        if ratio > best:
            best, witness = ratio, (x, y)
    if witness is None:
        raise InsufficientSamplesError(
            f"all {pairs} sampled pairs were degenerate"
        )
    return HolderEstimate(best, witness, used)


def _profile_sups(T: MapInstance, ns: tuple[int, ...], pairs: int,
                  seed: int) -> tuple[dict[int, float],
                                      tuple[SeqVec, SeqVec] | None, int]:
    """Iterate-n ratio suprema for every n in ns, walking each pair once."""
    if pairs < 1:
        raise InvalidBudgetError(f"pairs {pairs} is below 1")
    if not ns or min(ns) < 1:
        raise InvalidBudgetError("iterate list must contain integers >= 1")
    a = T.claims.alpha
    rng = as_rng(seed)
    ns_set = frozenset(ns)
    n_max = max(ns)
    sups = {n: -1.0 for n in ns}
    best = -1.0
    witness: tuple[SeqVec, SeqVec] | None = None
    used = 0
    for _ in range(pairs):
        x = T.domain.sample(rng)
        y = T.domain.sample(rng)
        d = distance(x, y, T.norm)
        if d < PAIR_CUTOFF:
            continue
        used += 1
        da = d ** a
        cx, cy = x, y
        for n in range(1, n_max + 1):
            cx = T.apply(cx)
            cy = T.apply(cy)
            if n in ns_set:
                ratio = distance(cx, cy, T.norm) / da
                if ratio > sups[n]:
                    sups[n] = ratio
                    if ratio > best:
                        best, witness = ratio, (x, y)
    if used == 0:
        raise InsufficientSamplesError(
            f"all {pairs} sampled pairs were degenerate"
        )
    return sups, witness, used


def check_invariance(T: MapInstance, samples: int, seed: int):
    """T(K) inside K, on the canonical points and `samples` random draws.
    Returns (violations, first_witness, checked)."""
    if samples < 0:
        raise InvalidBudgetError(f"samples {samples} is below 0")
    rng = as_rng(seed)
    checked = 0
    for x in T.domain.canonical_points():
        checked += 1
        if not T.domain.contains(T.apply(x)):
            return 1, x, checked
    for _ in range(samples):
        x = T.domain.sample(rng)
        checked += 1
        if not T.domain.contains(T.apply(x)):
            return 1, x, checked
    return 0, None, checked


def orbit(T: MapInstance, x0: SeqVec, depth: int) -> OrbitResult:
    if depth < 0:
        raise InvalidBudgetError(f"depth {depth} is below 0")
    if not T.domain.contains(x0):
        raise DomainViolationError(
            f"orbit start {format_vec(x0)} is outside the domain"
        )
    points = [x0]
    displacements = []
    max_norm = norm(x0, T.norm)
    cur = x0
    for _ in range(depth):
        nxt = T.apply(cur)
        displacements.append(distance(cur, nxt, T.norm))
        points.append(nxt)
        n = norm(nxt, T.norm)
        if n > max_norm:
            max_norm = n
        cur = nxt
    return OrbitResult(tuple(points), tuple(displacements), max_norm)


def _lambda_steps(lam: float, target: float, cap: int) -> int:
    n = math.ceil(math.log(target) / math.log(lam))
    return max(1, min(n, cap, 10_000))


def estimate_displacement(T: MapInstance, strategy: str, budget: int,
                          seed: int,
                          lambdas: tuple[float, ...] = (0.5, 0.9, 0.99, 0.999),
                          target: float = 1e-3) -> DisplacementEstimate:
    """Upper estimate of the minimal displacement inf ||x - Tx||.

    sample_min evaluates canonical points, the instance's witness family and
    random samples; orbit_min walks orbits from the canonical points;
    lambda_scaling walks orbits of x -> T(lam x) for the lam schedule,
    evaluating the displacement of T itself along the way; cesaro_affine
    averages the orbit (affine maps only).  All witness streams extend under
    a larger budget, so estimates never increase with it."""
    if budget < 1:
        raise InvalidBudgetError(f"budget {budget} is below 1")
    best = math.inf
    best_witness: SeqVec | None = None
    evaluations = 0

    def consider(x: SeqVec) -> float:
        nonlocal best, best_witness, evaluations
        d = T.displacement(x)
        evaluations += 1
        if d < best:
            best, best_witness = d, x
        return d

    if strategy == "sample_min":
        rng = as_rng(seed)
        for x in T.domain.canonical_points():
            consider(x)
        if T.witness_family is not None:
            for x in T.witness_family(budget):
                consider(x)
        while evaluations < budget:
            consider(T.domain.sample(rng))
    elif strategy == "orbit_min":
        starts = T.domain.canonical_points()
        steps = max(1, budget // max(1, len(starts)))
        for x0 in starts:
            cur = x0
            nxt = T.apply(cur)
            for _ in range(steps):
                d = distance(cur, nxt, T.norm)
                evaluations += 1
                if d < best:
                    best, best_witness = d, cur
                cur = nxt
                nxt = T.apply(cur)
    elif strategy == "lambda_scaling":
        if T.domain.kind not in _STAR_SHAPED:
            raise InvalidStrategyError(
                f"lambda_scaling needs a domain star-shaped about 0, "
                f"not {T.domain.kind}"
            )
        for lam in lambdas:
            if not 0.0 < lam < 1.0:
                raise InvalidParameterError("lambdas", "requires 0 < lam < 1")
            n = _lambda_steps(lam, target, budget)
            z = T.domain.canonical_points()[0]
            for k in range(1, n + 1):
                z = T.apply(scale(lam, z))
                if k <= 64 or k & (k - 1) == 0 or k % 64 == 0 or k == n:
                    if consider(z) <= target:
                        break
    elif strategy == "cesaro_affine":
        if not T.claims.affine:
            raise InvalidStrategyError(
                "cesaro_affine needs an affine map (claims.affine)"
            )
        x0 = T.domain.canonical_points()[0]
        acc = x0
        cur = x0
        for n in range(1, budget + 1):
            consider(scale(1.0 / n, acc))
            cur = T.apply(cur)
            acc = axpy(1.0, acc, 1.0, cur)
    else:
        raise InvalidStrategyError(
            f"unknown strategy {strategy!r}; expected sample_min, orbit_min, "
            f"lambda_scaling or cesaro_affine"
        )
    if best_witness is None:
        raise InsufficientSamplesError("no displacement witness was evaluated")
    return DisplacementEstimate(best, best_witness, evaluations)


def check_uniform_profile(T: MapInstance, n_list: tuple[int, ...], pairs: int,
                          seed: int) -> CheckRecord:
    """sup_x,y ||T^n x - T^n y|| / ||x - y||^alpha for each n, against the
    single claimed constant.  Only maps claiming uniformity accept this."""
    if not T.claims.uniform:
        raise InvalidCheckError(
            f"{T.name} makes no uniform claim; use holder_ratio or "
            f"asymptotic_profile"
        )
    ns = tuple(n_list)
    sups, witness, used = _profile_sups(T, ns, pairs, seed)
    worst = max(sups.values())
    verdict = _hard_verdict(worst, T.claims.holder_constant, T.claims.hard)
    return CheckRecord(
        "uniform_profile", T.claims.holder_constant, worst, verdict,
        _pair_witness(witness),
        direction=("per-iterate sup ratios are lower bounds for the "
                   "uniform constant"),
        details={"per_n": {str(n): sups[n] for n in ns},
                 "pairs_used": used},
    )


def check_asymptotic_profile(T: MapInstance, n_max: int, pairs: int,
                             seed: int) -> CheckRecord:
    """Per-iterate sup ratios against the claimed n-dependent profile;
    measured as the worst margin measured/profile(n) over n <= n_max."""
    if T.claims.asymptotic_profile is None:
        raise InvalidCheckError(f"{T.name} has no asymptotic profile")
    if n_max < 1:
        raise InvalidBudgetError(f"n_max {n_max} is below 1")
    ns = tuple(range(1, n_max + 1))
    sups, witness, used = _profile_sups(T, ns, pairs, seed)
    margins = {n: sups[n] / T.claims.asymptotic_profile(n) for n in ns}
    worst = max(margins.values())
    verdict = "pass" if worst <= 1.0 + RATIO_SLACK else "fail"
    if not T.claims.hard:
        verdict = "report_only"
    return CheckRecord(
        "asymptotic_profile", "profile(n)", worst, verdict,
        _pair_witness(witness),
        direction=("measured/profile margin per iterate; at most 1 when "
                   "the profile holds"),
        details={"per_n": {str(n): sups[n] for n in ns},
                 "profile": {str(n): T.claims.asymptotic_profile(n)
                             for n in ns},
                 "pairs_used": used},
    )


def check_approx_fixed_set(T: MapInstance, delta: float, samples: int,
                           seed: int):
    """Among sampled x with ||x - Tx|| <= delta, verify ||Tx - T^2x|| <= delta
    (the one-step stability that makes delta-approximate fixed point sets
    forward invariant for delta >= 1).  Returns (max_second, qualifying)."""
    if not delta >= 1.0:
        raise InvalidParameterError("delta", "requires delta >= 1")
    if samples < 1:
        raise InvalidBudgetError(f"samples {samples} is below 1")
    rng = as_rng(seed)
    qualifying = 0
    max_second = 0.0
    for _ in range(samples):
        x = T.domain.sample(rng)
        tx = T.apply(x)
        if distance(x, tx, T.norm) <= delta:
            qualifying += 1
            second = distance(tx, T.apply(tx), T.norm)
            if second > max_second:
                max_second = second
    return max_second, qualifying


def check_oracle(T: MapInstance, x0: SeqVec, n_max: int):
    """Max deviation between iterated applications and the closed form."""
    if T.iterate_oracle is None:
        raise InvalidCheckError(f"{T.name} has no iterate oracle")
    if n_max < 0:
        raise InvalidBudgetError(f"n_max {n_max} is below 0")
    worst = 0.0
    cur = x0
    for n in range(1, n_max + 1):
        cur = T.apply(cur)
        dev = distance(cur, T.iterate_oracle(x0, n), T.norm)
        if dev > worst:
            worst = dev
    return worst


# ---------------------------------------------------------------------------
# Request plumbing


CHECK_KINDS = (
    "holder_ratio",
    "invariance",
    "orbit",
    "displacement",
    "uniform_profile",
    "asymptotic_profile",
    "approx_fixed_set",
    "oracle_compare",
)


@dataclass(frozen=True)
class CheckRequest:
    kind: str
    pairs: int = 1000
    samples: int = 1000
    iterate: int = 1
    exponent: float | None = None
    n_list: tuple[int, ...] = (1, 2, 5, 10, 20)
    n_max: int = 10
    depth: int = 50
    budget: int = 1000
    strategy: str = "sample_min"
    delta: float = 1.0
    x0: SeqVec | None = None
    seed: int | None = None
    tolerance: float | None = None
    lambdas: tuple[float, ...] = (0.5, 0.9, 0.99, 0.999)
    target: float = 1e-3

    def __post_init__(self) -> None:
        if self.kind not in CHECK_KINDS:
            raise InvalidCheckError(
                f"unknown check kind {self.kind!r}; expected one of "
                f"{', '.join(CHECK_KINDS)}"
            )


@dataclass
class CheckRecord:
    kind: str
    claimed: object
    measured: float | None
    verdict: str  # "pass" | "fail" | "report_only"
    witness: str | None
    direction: str
    runtime_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _pair_witness(pair: tuple[SeqVec, SeqVec] | None) -> str | None:
    if pair is None:
        return None
    return f"x = {format_vec(pair[0])}, y = {format_vec(pair[1])}"


def _hard_verdict(measured: float, claimed: float | None, hard: bool) -> str:
    if claimed is None or not hard:
        return "report_only"
    return "pass" if measured <= claimed * (1.0 + RATIO_SLACK) else "fail"


def run_check(T: MapInstance, req: CheckRequest, default_seed: int = 0) -> CheckRecord:
    """Dispatch one CheckRequest against a map and time it."""
    seed = req.seed if req.seed is not None else default_seed
    start = time.perf_counter()
    rec = _run_check_inner(T, req, seed)
    rec.runtime_ms = round((time.perf_counter() - start) * 1000.0, 3)
    return rec


def _run_check_inner(T: MapInstance, req: CheckRequest, seed: int) -> CheckRecord:
    claims = T.claims
    kind = req.kind
    if kind == "holder_ratio":
        est = estimate_holder_ratio(T, req.pairs, seed, req.iterate, req.exponent)
        a = claims.alpha if req.exponent is None else req.exponent
        if a == claims.alpha:
            claimed = claims.holder_constant
            covered = claims.uniform or req.iterate == 1
        elif a == 1.0 and claims.classical_lipschitz is not None:
            claimed = claims.classical_lipschitz
            covered = claims.uniform or req.iterate == 1
        else:
            claimed, covered = None, False
        verdict = _hard_verdict(est.sup_ratio, claimed if covered else None,
                                claims.hard)
        return CheckRecord(
            kind, claimed, est.sup_ratio, verdict, _pair_witness(est.witness),
            direction=("measured sup ratio is a lower bound for the true "
                       "constant; the claim is an upper bound"),
            details={"exponent": a, "iterate": req.iterate,
                     "pairs_used": est.pairs_used},
        )
    if kind == "invariance":
        violations, witness, checked = check_invariance(T, req.samples, seed)
        return CheckRecord(
            kind, "T(K) inside K", float(violations),
            "pass" if violations == 0 else "fail",
            None if witness is None else format_vec(witness),
            direction="violations are conclusive; passes are sampled evidence",
            details={"checked": checked},
        )
    if kind == "orbit":
        x0 = req.x0 if req.x0 is not None else T.domain.canonical_points()[0]
        res = orbit(T, x0, req.depth)
        return CheckRecord(
            kind, None, res.max_norm, "report_only", format_vec(x0),
            direction="boundedness summary; max norm along the orbit",
            details={
                "depth": req.depth,
                "displacements": list(res.displacements[:20]),
                "final_displacement": (res.displacements[-1]
                                       if res.displacements else None),
            },
        )
    if kind == "displacement":
        est = estimate_displacement(T, req.strategy, req.budget, seed,
                                    req.lambdas, req.target)
        bound = claims.displacement_bound
        tol = req.tolerance if req.tolerance is not None else DISPLACEMENT_TOL
        if bound is None:
            verdict = "report_only"
        elif bound == 0.0:
            # An upper estimate cannot refute d = 0; confirm it only when a
            # witness reaches it to tolerance.
            verdict = "pass" if est.value <= tol else "report_only"
        else:
            verdict = "pass" if est.value <= bound + tol else "fail"
        return CheckRecord(
            kind, bound, est.value, verdict, format_vec(est.witness),
            direction=("measured value is an upper bound for the minimal "
                       "displacement"),
            details={"strategy": req.strategy, "budget": req.budget,
                     "evaluations": est.evaluations},
        )
    if kind == "uniform_profile":
        return check_uniform_profile(T, req.n_list, req.pairs, seed)
    if kind == "asymptotic_profile":
        return check_asymptotic_profile(T, req.n_max, req.pairs, seed)
    if kind == "approx_fixed_set":
        max_second, qualifying = check_approx_fixed_set(T, req.delta,
                                                        req.samples, seed)
        tol = req.tolerance if req.tolerance is not None else DISPLACEMENT_TOL
        return CheckRecord(
            kind, req.delta, max_second,
            "pass" if max_second <= req.delta + tol else "fail",
            None,
            direction=("max ||Tx - T^2x|| over sampled delta-approximate "
                       "fixed points"),
            details={"qualifying": qualifying, "samples": req.samples},
        )
    # oracle_compare
    x0 = req.x0 if req.x0 is not None else T.domain.canonical_points()[0]
    worst = check_oracle(T, x0, req.n_max)
    tol = req.tolerance if req.tolerance is not None else ORACLE_TOL
    return CheckRecord(
        "oracle_compare", tol, worst,
        "pass" if worst <= tol else "fail",
        format_vec(x0),
        direction="max deviation between iteration and the closed form",
        details={"n_max": req.n_max},
    )
