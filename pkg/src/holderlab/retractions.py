"""Retractions onto balls, cones and spheres, with their Lipschitz budgets.

Claimed constants (measured empirically by the verifier, proved elsewhere):
radial 2 (1 in Hilbert space), abs 1, positive_part 1, clamp 1 in the sup
norm, the excess-removal map Q is 3, and the two-branch retraction of the l1
ball onto its sphere is 8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainViolationError
from .seqvec import SeqVec, NormKind, norm, scale, shift_right

__all__ = [
    "radial_retract",
    "abs_retract",
    "positive_part",
    "clamp_retract",
    "ExcessSplit",
    "iota_mu_q",
    "excess_map",
    "l1_sphere_retract",
    "RetractionTag",
    "RETRACTION_TAGS",
]

L1 = NormKind.lp(1.0)


def radial_retract(x: SeqVec, r: float, kind: NormKind) -> SeqVec:
    """Identity inside the radius-r ball, x * r/||x|| outside."""
    n = norm(x, kind)
    if n <= r:
        return x
    return scale(r / n, x)


def abs_retract(x: SeqVec) -> SeqVec:
    """Coordinatewise absolute value (retraction onto the nonnegative cone
    that preserves every norm used here)."""
    return SeqVec.from_dict({i: abs(v) for i, v in x.support}, abs(x.tail))


def positive_part(x: SeqVec) -> SeqVec:
    """Coordinatewise max(t, 0), the metric projection onto the cone."""
    return SeqVec.from_dict(
        {i: v if v > 0.0 else 0.0 for i, v in x.support},
        x.tail if x.tail > 0.0 else 0.0,
    )


def clamp_retract(x: SeqVec, r: float) -> SeqVec:
    """Coordinatewise min(t, r) on nonnegative vectors."""
    neg_tol = 1e-12
    if x.tail < -neg_tol or any(v < -neg_tol for _, v in x.support):
        raise DomainViolationError("clamp_retract needs nonnegative coordinates")
    return SeqVec.from_dict(
        {i: v if v < r else r for i, v in x.support},
        x.tail if x.tail < r else r,
    )


@dataclass(frozen=True)
class ExcessSplit:
    """The (iota, mu, Q) triple behind the l1 sphere retraction: Q removes
    exactly the l1 excess r - ||x||_1 from the deepest coordinates, keeping a
    mu fraction of coordinate iota and everything beyond it."""

    iota: int
    mu: float
    q: SeqVec


def iota_mu_q(x: SeqVec, r: float) -> ExcessSplit:
    """Split x in the annulus r/2 <= ||x||_1 < r.  iota is the smallest j with
    sum_{k>j} |t_k| < r - ||x||_1, mu in (0, 1] keeps part of coordinate iota,
    and Q(x) = mu*t_iota*e_iota + sum_{k>iota} t_k e_k has ||Q(x)||_1 equal to
    the excess r - ||x||_1 exactly."""
    nx = norm(x, L1)
    if nx < r / 2.0 or nx >= r:
        raise DomainViolationError(
            f"iota_mu_q is defined for r/2 <= ||x||_1 < r, got ||x||_1 = {nx!r}"
        )
    gap = r - nx
    # Suffix sums over the support; between support indices the suffix sum is
    # constant, so the minimal j is always a support index (the last drop
    # reaches 0 < gap).
    supp = x.support
    suffix = 0.0
    suffixes = [0.0] * len(supp)
    for k in range(len(supp) - 1, -1, -1):
        suffixes[k] = suffix
        suffix += abs(supp[k][1])
    for k, (i, v) in enumerate(supp):
        if suffixes[k] < gap:
            mu = (gap - suffixes[k]) / abs(v) if v != 0.0 else 1.0
            mu = min(max(mu, 0.0), 1.0)
            q = {i: mu * v}
            q.update({j: w for j, w in supp[k + 1:]})
            return ExcessSplit(i, mu, SeqVec.from_dict(q, 0.0))
    # Unreachable for canonical tail-0 vectors with ||x||_1 >= r/2 > gap.
    raise DomainViolationError("no excess split exists for this vector")


def excess_map(x: SeqVec, r: float) -> SeqVec:
    """Q alone (claimed 3-Lipschitz on the annulus)."""
    return iota_mu_q(x, r).q


def _sphere_low(x: SeqVec, r: float, nx: float) -> SeqVec:
    # (r - 2||x||_1) e_1 + 2 S(x); the shift frees coordinate 1.
    out = {i + 1: 2.0 * v for i, v in x.support}
    out[1] = r - 2.0 * nx
    return SeqVec.from_dict(out, 0.0)


def _sphere_high(x: SeqVec, r: float) -> SeqVec:
    # (x - Q(x)) + 2 S(Q(x)); the two parts have disjoint support by the
    # choice of iota, so the result keeps l1 mass ||x||_1 + ||Q(x)||_1 = r.
    split = iota_mu_q(x, r)
    qd = split.q._dict
    out: dict[int, float] = {}
    for i, v in x.support:
        kept = v - qd.get(i, 0.0)
        if kept != 0.0:
            out[i] = kept
    for i, v in split.q.support:
        out[i + 1] = out.get(i + 1, 0.0) + 2.0 * v
    return SeqVec.from_dict(out, 0.0)


def l1_sphere_retract(x: SeqVec, r: float) -> SeqVec:
    """Retraction of the l1 ball of radius r onto its sphere.

    Below mass r/2 the vector is shifted and doubled and the slack parked on
    the first coordinate; above, the excess split moves mass without leaving
    the sphere.  The two formulas agree on ||x||_1 = r/2 (ties take the first
    branch) and the map fixes the sphere."""
    nx = norm(x, L1)
    if nx > r * (1.0 + 1e-9):
        raise DomainViolationError(
            f"l1_sphere_retract needs ||x||_1 <= r, got {nx!r} > {r!r}"
        )
    if nx <= r / 2.0:
        return _sphere_low(x, r, nx)
    if nx >= r:
        return x  # boundary rule: Q = 0 and the sphere is fixed
    return _sphere_high(x, r)


@dataclass(frozen=True)
class RetractionTag:
    """Name, claimed Lipschitz constant and the sets a retraction connects."""

    name: str
    claimed_lipschitz: float
    source_set: str
    target_set: str

    def __post_init__(self) -> None:
        if not self.claimed_lipschitz >= 1.0:
            raise ValueError("a retraction is at best 1-Lipschitz")


RETRACTION_TAGS = {
    "radial": RetractionTag("radial", 2.0, "normed space", "ball(r)"),
    "abs": RetractionTag("abs", 1.0, "l1", "nonnegative cone"),
    "positive_part": RetractionTag("positive_part", 1.0, "l2",
                                   "nonnegative cone"),
    "clamp": RetractionTag("clamp", 1.0, "nonnegative cone (sup norm)",
                           "coefficient_box(r)"),
    "excess_q": RetractionTag("excess_q", 3.0, "l1 shell r/2 <= ||x||_1 < r",
                              "excess part (not a retraction)"),
    "l1_sphere": RetractionTag("l1_sphere", 8.0, "l1 ball(r)",
                               "l1 sphere(r)"),
}
