"""Catalog of Holder-continuous self-maps of sequence-space sets.

Each constructor returns a MapInstance bundling the map itself, its domain,
the norm its claims are stated in, and a ClaimProfile of constants to verify
empirically: Holder exponent and constant, uniformity over iterates or an
asymptotic profile, minimal-displacement bounds, and the fixed point set.

Most instances are fixed-point free with displacement 0, which is exactly
what makes them worth measuring: no approximate fixed point sequence
converges, yet arbitrarily good approximate fixed points exist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping

from .domains import (
    DomainSpec,
    ball,
    c_interval,
    coefficient_box,
    sigma_band,
    simplex,
    sub_simplex,
)
from .errors import (
    InvalidCompositionError,
    InvalidParameterError,
    NotInSpaceError,
    DomainViolationError,
)
from .retractions import (
    RETRACTION_TAGS,
    abs_retract,
    clamp_retract,
    l1_sphere_retract,
    positive_part,
    radial_retract,
)
from .seqvec import (
    SeqVec,
    NormKind,
    ZERO,
    axpy,
    basis_vector,
    coordinate,
    distance,
    norm,
    scale,
    shift_right,
)

__all__ = [
    "FixedPointSet",
    "ClaimProfile",
    "MapInstance",
    "CatalogEntry",
    "CATALOG",
    "RETRACTION_CATALOG",
    "build_map",
    "catalog_names",
    "retraction_names",
    "retraction_map",
    "prus_map",
    "norming_map",
    "baseline_c_map",
    "shift_simplex_map",
    "affine_mixing_map",
    "deficiency_map",
    "goebel_kirk_map",
    "hyperconvex_map",
    "c0_family_map",
    "affine_cube_map",
    "renormed_l1_map",
    "l1_ball_composite_map",
    "lambda_scale",
    "holderize",
    "lift_to_ball",
    "constant_map",
    "ScalarOrbit",
    "banach_alpha_gt1_iterate",
    "sup_t_alpha_log",
]

SUP = NormKind.sup()
L1 = NormKind.lp(1.0)
L2 = NormKind.lp(2.0)
MPN = NormKind.max_pos_neg_l1()


def sup_t_alpha_log(alpha: float) -> float:
    """sup over t in (0,1) of t^alpha * |ln t|, attained at t = e^(-1/alpha)."""
    return 1.0 / (math.e * alpha)


@dataclass(frozen=True)
class FixedPointSet:
    """What is claimed about the fixed point set: empty, a single known point
    (with a truncation residual when the exact point is not representable),
    or unknown."""

    kind: str  # "empty" | "singleton" | "unknown"
    point: SeqVec | None = None
    residual: float = 0.0

    @staticmethod
    def empty() -> "FixedPointSet":
        return FixedPointSet("empty")

    @staticmethod
    def singleton(point: SeqVec, residual: float = 0.0) -> "FixedPointSet":
        return FixedPointSet("singleton", point, residual)

    @staticmethod
    def unknown() -> "FixedPointSet":
        return FixedPointSet("unknown")


@dataclass(frozen=True)
class ClaimProfile:
    """Constants a MapInstance claims, in the instance's own norm.

    The single-step claim is ||Tx - Ty|| <= holder_constant * ||x - y||^alpha.
    uniform promises the same constant for every iterate T^n; an asymptotic
    profile instead bounds the iterate-n ratio by asymptotic_profile(n).
    hard claims fail verification when measured ratios exceed them; soft
    claims are recorded in reports without affecting the verdict.
    """

    alpha: float
    holder_constant: float
    uniform: bool
    hard: bool = True
    affine: bool = False
    isometry: bool = False
    classical_lipschitz: float | None = None
    asymptotic_profile: Callable[[int], float] | None = None
    displacement_bound: float | None = None
    lower_bound: float | None = None
    fixed_points: FixedPointSet = field(default_factory=FixedPointSet.unknown)

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise InvalidParameterError("alpha", "requires alpha > 0")
        if self.asymptotic_profile is not None and self.uniform:
            raise InvalidParameterError(
                "uniform", "an asymptotic profile requires uniform = False"
            )


@dataclass(frozen=True)
class MapInstance:
    name: str
    params: Mapping[str, object]
    domain: DomainSpec
    norm: NormKind
    apply: Callable[[SeqVec], SeqVec]
    claims: ClaimProfile
    formula: str
    iterate_oracle: Callable[[SeqVec, int], SeqVec] | None = None
    witness_family: Callable[[int], list[SeqVec]] | None = None
    notes: str = ""

    def iterate(self, x: SeqVec, n: int) -> SeqVec:
        for _ in range(n):
            x = self.apply(x)
        return x

    def displacement(self, x: SeqVec) -> float:
        return distance(x, self.apply(x), self.norm)


def _checkpoint_range(budget: int, cap: int) -> list[int]:
    ns = list(range(1, min(budget, cap) + 1))
    n = cap * 2
    while n <= budget:
        ns.append(n)
        n *= 2
    if budget > cap and budget not in ns:
        ns.append(budget)
    return ns


# ---------------------------------------------------------------------------
# Individual constructions


def prus_map(alpha: float = 0.5) -> MapInstance:
    """T(x) = (|1 - |L(x)|^a|, |t1|^a, |t2|^a, ...) on the sup-norm ball of c,
    where L(x) is the limit of x.  Holder nonexpansive with exponent a, fixed
    point free, and T^n(0) walks along (1,...,1,0,...) at displacement 1."""
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")

    def apply(x: SeqVec) -> SeqVec:
        new_tail = abs(x.tail) ** alpha
        out = {1: abs(1.0 - abs(x.tail) ** alpha)}
        for i, v in x.support:
            out[i + 1] = abs(v) ** alpha
        return SeqVec.from_dict(out, new_tail)

    return MapInstance(
        name="prus",
        params={"alpha": alpha},
        domain=ball(1.0, SUP),
        norm=SUP,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=1.0,
            uniform=False,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="T(x) = (|1 - |lim x|^a|, |t1|^a, |t2|^a, ...)",
        notes=("the orbit of 0 has every displacement equal to 1, so the "
               "minimal displacement is witnessed nowhere along it"),
    )


def norming_map(alpha: float = 0.5) -> MapInstance:
    """T(x) = ((1 + t1^2)/2)^a * e1 on the l2 ball; t1 is the value of the
    norming functional of e1.  Fixed point e1; for a = 1/2 the iterates have
    the closed form (sum_{i<=n} 2^-i + t1^2/2^n)^(1/2) e1."""
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")

    def apply(x: SeqVec) -> SeqVec:
        phi = coordinate(x, 1)
        c = ((1.0 + phi * phi) / 2.0) ** alpha
        return SeqVec(((1, c),), 0.0)

    oracle = None
    if alpha == 0.5:

        def oracle(x: SeqVec, n: int) -> SeqVec:
            if n == 0:
                return x
            phi = coordinate(x, 1)
            s = math.fsum(2.0 ** -i for i in range(1, n + 1)) + phi * phi * 2.0 ** -n
            return SeqVec(((1, math.sqrt(s)),), 0.0)

    return MapInstance(
        name="norming",
        params={"alpha": alpha},
        domain=ball(1.0, L2),
        norm=L2,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=1.0,
            uniform=False,
            classical_lipschitz=alpha * 2.0 ** (1.0 - alpha),
            displacement_bound=0.0,
            fixed_points=FixedPointSet.singleton(basis_vector(1, 1.0)),
        ),
        formula="T(x) = ((1 + t1^2)/2)^a e1",
        iterate_oracle=oracle,
        notes="also classically Lipschitz with constant a*2^(1-a)",
    )


def baseline_c_map() -> MapInstance:
    """F(x) = (1, 0, |t1|, |t2|, ...) on the sup-norm ball: nonexpansive,
    fixed point free, the inner map lifted into small balls elsewhere."""

    def apply(x: SeqVec) -> SeqVec:
        out = {1: 1.0, 2: 0.0}
        for i, v in x.support:
            out[i + 2] = abs(v)
        return SeqVec.from_dict(out, abs(x.tail))

    return MapInstance(
        name="baseline_c",
        params={},
        domain=ball(1.0, SUP),
        norm=SUP,
        apply=apply,
        claims=ClaimProfile(
            alpha=1.0,
            holder_constant=1.0,
            uniform=True,
            classical_lipschitz=1.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="F(x) = (1, 0, |t1|, |t2|, ...)",
    )


def shift_simplex_map(p: float = 1.0, alpha: float = 0.5, lam: float = 0.5) -> MapInstance:
    """The forward shift on the lp simplex slice of mass lam^(p/(1-a))/2.
    Uniformly a-Holder lam-contractive (the mass is sized so the diameter
    absorbs the exponent gap), affine, fixed point free, displacement 0."""
    if not p >= 1.0:
        raise InvalidParameterError("p", "requires p >= 1")
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    if not 0.0 < lam < 1.0:
        raise InvalidParameterError("lam", "requires 0 < lam < 1")
    mass = lam ** (p / (1.0 - alpha)) / 2.0
    dom = simplex(p, mass)

    def apply(x: SeqVec) -> SeqVec:
        return SeqVec(tuple((i + 1, v) for i, v in x.support), 0.0)

    def witnesses(budget: int) -> list[SeqVec]:
        out = []
        for n in _checkpoint_range(budget, 64):
            if n > 512:
                break
            out.append(SeqVec.from_dict({i: mass / n for i in range(1, n + 1)}))
        return out

    return MapInstance(
        name="shift_simplex",
        params={"p": p, "alpha": alpha, "lambda": lam, "mass": mass},
        domain=dom,
        norm=NormKind.lp(p),
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=lam,
            uniform=True,
            affine=True,
            classical_lipschitz=1.0,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="F(t1, t2, ...) = (0, t1, t2, ...) on the mass slice",
        witness_family=witnesses,
        notes=("equal-mass averages x_n = (mass/n)(e1+...+en) displace by "
               "exactly 2*mass/n in l1"),
    )


def affine_mixing_map(
    L: float = 2.0,
    lam: float = 0.75,
    alpha: float = 0.5,
    gamma: Callable[[int], float] | None = None,
) -> MapInstance:
    """Mass-preserving affine mixing on the l1 simplex slice: coordinate n
    keeps a (1 - gamma_n) share and passes gamma_n forward.  Fixed point
    free; two-sided bound (1/L)||x-y|| <= ||Tx-Ty|| <= lam*||x-y||^a claimed,
    the lower side recorded for measurement only."""
    if not L > 1.0:
        raise InvalidParameterError("L", "requires L > 1")
    if not 1.0 / L < lam <= 1.0:
        raise InvalidParameterError("lam", "requires 1/L < lam <= 1")
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    if gamma is None:
        gamma = lambda n: 2.0 ** -n
    mass = 0.5 * (lam / L) ** (1.0 / (1.0 - alpha))
    for n in (1, 2, 3, 16):
        g = gamma(n)
        if not 0.0 < g < 1.0:
            raise InvalidParameterError("gamma", "requires 0 < gamma(n) < 1")

    def apply(x: SeqVec) -> SeqVec:
        out: dict[int, float] = {}
        for i, v in x.support:
            g = gamma(i)
            out[i] = out.get(i, 0.0) + (1.0 - g) * v
            out[i + 1] = out.get(i + 1, 0.0) + g * v
        return SeqVec.from_dict(out, 0.0)

    return MapInstance(
        name="affine_mixing",
        params={"L": L, "lambda": lam, "alpha": alpha, "mass": mass,
                "gamma": "2^-n"},
        domain=simplex(1.0, mass),
        norm=L1,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=lam,
            uniform=True,
            affine=True,
            classical_lipschitz=1.0,
            lower_bound=1.0 / L,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="T(x)_n = (1 - gamma_n) t_n + gamma_{n-1} t_{n-1}, gamma_n = 2^-n",
        notes=("the expansion floor ||Tx - Ty|| >= ||x - y||/L is recorded "
               "report-only; the mass slice is sized from (lam, L, a)"),
    )


def deficiency_map(p: float = 2.0, alpha: float = 0.5) -> MapInstance:
    """T(x) = (r - ||x||_p) e1 + sum_i t_i e_{2i} on the lp ball whose radius
    r solves (2r)^(1-a) 2^(2-a) = 1, which makes T a-Holder nonexpansive;
    fixed point free with minimal displacement at most 2r."""
    if not p >= 1.0:
        raise InvalidParameterError("p", "requires p >= 1")
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    lam = 0.5 * 0.5 ** ((2.0 - alpha) / (1.0 - alpha))
    nk = NormKind.lp(p)
    dom = ball(lam, nk)

    def apply(x: SeqVec) -> SeqVec:
        nx = norm(x, nk)
        out = {2 * i: v for i, v in x.support}
        out[1] = lam - nx
        return SeqVec.from_dict(out, 0.0)

    return MapInstance(
        name="deficiency",
        params={"p": p, "alpha": alpha, "radius": lam},
        domain=dom,
        norm=nk,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=1.0,
            uniform=False,
            displacement_bound=2.0 * lam,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="T(x) = (r - ||x||_p) e1 + sum_i t_i e_{2i} on the radius-r ball",
        notes="the radius satisfies (2r)^(1-a) * 2^(2-a) = 1",
    )


def _gk_damping(i: int) -> float:
    return 1.0 - 1.0 / (i * i)


def goebel_kirk_map(alpha: float = 0.5) -> MapInstance:
    """Asymptotically a-Holder nonexpansive map on the l2 ball:
    F(t) = (0, t1^a, A2 t2, A3 t3, ...) with A_i = 1 - 1/i^2, composed with
    the projection onto the cone in front and onto the ball behind.

    The trailing ball projection is needed because F alone can push points
    slightly outside the ball (first-coordinate mass gains under t1^a); the
    projection is nonexpansive in l2 and acts at most once along any orbit,
    since F outputs have first coordinate 0 and are then strictly shrunk."""
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")

    def apply(x: SeqVec) -> SeqVec:
        if x.tail != 0.0:
            raise NotInSpaceError("goebel_kirk is defined on l2 (tail 0)")
        out: dict[int, float] = {}
        for i, v in x.support:
            if v <= 0.0:
                continue  # projection onto the cone
            if i == 1:
                out[2] = v ** alpha
            else:
                out[i + 1] = _gk_damping(i) * v
        y = SeqVec.from_dict(out, 0.0)
        return radial_retract(y, 1.0, L2)

    def profile(n: int) -> float:
        return (n + 1) / n * 2.0 ** (1.0 - alpha)

    return MapInstance(
        name="goebel_kirk",
        params={"alpha": alpha},
        domain=ball(1.0, L2),
        norm=L2,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=2.0,
            uniform=False,
            asymptotic_profile=profile,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.singleton(ZERO),
        ),
        formula=("T = proj_ball . F . pos with "
                 "F(t) = (0, t1^a, A2 t2, A3 t3, ...), A_i = 1 - 1/i^2"),
        notes=("iterate-n ratios are bounded by the profile "
               "(n+1)/n * 2^(1-a); the map is not classically Lipschitz "
               "(recorded, not asserted)"),
    )


def hyperconvex_map(N: int = 4, alpha: float = 0.5) -> MapInstance:
    """F(x) = (1/N, t2 t1^a, t1, t2, ...) on coords and tail in [0, 1/N].
    Uniformly a-Holder nonexpansive, fixed point free; iterates have a closed
    form used as the oracle."""
    if N < 1:
        raise InvalidParameterError("N", "requires N >= 1")
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    if not 2.0 <= float(N) ** alpha:
        raise InvalidParameterError("N", "requires N^alpha >= 2")
    cap = 1.0 / N
    dom = c_interval(cap)

    def apply(x: SeqVec) -> SeqVec:
        t1 = t2 = x.tail
        for i, v in x.support:  # sorted, so only the first entries matter
            if i == 1:
                t1 = v
            else:
                if i == 2:
                    t2 = v
                break
        head = [(1, cap), (2, t2 * t1 ** alpha)]
        head += [(i + 2, v) for i, v in x.support]
        return SeqVec.from_sorted(head, x.tail)

    def oracle(x: SeqVec, n: int) -> SeqVec:
        if n == 0:
            return x
        t1 = coordinate(x, 1)
        t2 = coordinate(x, 2)
        out: list[tuple[int, float]] = []
        for j in range(1, n + 1):
            out.append((2 * j - 1, cap))
            out.append((2 * j, t2 * (t1 / float(N) ** (n - j)) ** alpha))
        out.extend((2 * n + i, v) for i, v in x.support)
        return SeqVec.from_sorted(out, x.tail)

    return MapInstance(
        name="hyperconvex",
        params={"N": N, "alpha": alpha},
        domain=dom,
        norm=SUP,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=1.0,
            uniform=True,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="F(x) = (1/N, t2 t1^a, t1, t2, ...) with coords in [0, 1/N]",
        iterate_oracle=oracle,
        notes=("scaling the argument by lam < 1 gives orbits whose "
               "displacements decay like lam^n"),
    )


def c0_family_map(delta: float = 0.5, q: float = 0.25, alpha: float = 0.9,
                  breadth: int = 64) -> MapInstance:
    """T_a(x) = (1-delta) e1 + sum_i (1-delta) t_i^a e_{i+1} on the band
    q^i <= t_i <= t_1 = 1-delta.  For a < 1 fixed point free with minimal
    displacement at most (1-delta)(1-a) sup t^a|ln t| = (1-delta)(1-a)/(e a);
    for a = 1 the geometric point sum (1-delta)^i e_i is fixed."""
    if not 0.0 < delta < 1.0:
        raise InvalidParameterError("delta", "requires 0 < delta < 1")
    if not 0.0 < q <= 1.0 - delta:
        raise InvalidParameterError("q", "requires 0 < q <= 1 - delta")
    if not 0.0 < alpha <= 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha <= 1")
    top = 1.0 - delta
    dom = sigma_band(delta, q, breadth=breadth)
    star = SeqVec.from_dict({i: top ** i for i in range(1, breadth + 1)})

    def apply(x: SeqVec) -> SeqVec:
        if x.tail != 0.0:
            raise NotInSpaceError("c0_family is defined on c0 (tail 0)")
        out = {1: top}
        for i, v in x.support:
            if v < 0.0:
                raise DomainViolationError("c0_family needs nonnegative coords")
            out[i + 1] = top * v ** alpha
        return SeqVec.from_dict(out, 0.0)

    if alpha == 1.0:
        fps = FixedPointSet.singleton(star, residual=top ** (breadth + 1))
        disp = 0.0
    else:
        fps = FixedPointSet.empty()
        disp = top * (1.0 - alpha) * sup_t_alpha_log(alpha)

    return MapInstance(
        name="c0_family",
        params={"delta": delta, "q": q, "alpha": alpha},
        domain=dom,
        norm=SUP,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=1.0,
            uniform=False,
            displacement_bound=disp,
            fixed_points=fps,
        ),
        formula="T_a(x) = ((1-d), (1-d) t1^a, (1-d) t2^a, ...) on the band",
        witness_family=lambda budget: [star],
        notes=("the family is continuous in the exponent: "
               "||T_a(x) - T_b(x)|| <= ((1-d)/2)|a-b| once a, b are large "
               "enough that t^a|ln t| <= 1/2 on (0, 1]"),
    )


def affine_cube_map(r: float = 0.125, alpha: float = 0.5, lam: float = 0.5,
                    beta: Callable[[int], float] | None = None,
                    breadth: int = 64) -> MapInstance:
    """T(x)_n = (1 - beta_n) t_n + r beta_n on the c0 coefficient box [0, r],
    with beta_n = 1/(n+1) by default.  Uniformly a-Holder lam-contractive
    when (2r)^(1-a) <= lam; the untruncated map is fixed point free, and the
    corner witnesses r(e1+...+em) displace by exactly r*beta_{m+1}."""
    if not r > 0.0:
        raise InvalidParameterError("r", "requires r > 0")
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    if not 0.0 < lam < 1.0:
        raise InvalidParameterError("lam", "requires 0 < lam < 1")
    if not (2.0 * r) ** (1.0 - alpha) <= lam:
        raise InvalidParameterError("r", "requires (2r)^(1-alpha) <= lam")
    if beta is None:
        beta = lambda n: 1.0 / (n + 1)
    betas = [beta(n) for n in range(1, breadth + 1)]
    for n, bn in enumerate(betas, start=1):
        if not 0.0 < bn < 1.0:
            raise InvalidParameterError("beta", "requires 0 < beta(n) < 1")
    dom = coefficient_box(r, breadth=breadth)

    def apply(x: SeqVec) -> SeqVec:
        if x.tail != 0.0:
            raise NotInSpaceError("affine_cube is defined on c0 (tail 0)")
        d = dict(x.support)
        out: dict[int, float] = {}
        for n in range(1, breadth + 1):
            bn = betas[n - 1]
            out[n] = (1.0 - bn) * d.pop(n, 0.0) + r * bn
        out.update(d)  # coordinates beyond the stored breadth are kept
        return SeqVec.from_dict(out, 0.0)

    def witnesses(budget: int) -> list[SeqVec]:
        top = min(budget, breadth - 1)
        return [
            SeqVec.from_dict({i: r for i in range(1, m + 1)})
            for m in range(1, top + 1)
        ]

    return MapInstance(
        name="affine_cube",
        params={"r": r, "alpha": alpha, "lambda": lam, "beta": "1/(n+1)"},
        domain=dom,
        norm=SUP,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=lam,
            uniform=True,
            affine=True,
            classical_lipschitz=1.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="T(x)_n = (1 - beta_n) t_n + r beta_n, beta_n = 1/(n+1)",
        witness_family=witnesses,
        notes=("the affine part is stored up to the domain breadth, so the "
               "full box corner is a truncation fixed point; the emptiness "
               "claim refers to the untruncated rule and the reported "
               "minimal displacement is never asserted to be zero"),
    )


def renormed_l1_map() -> MapInstance:
    """T(x) = (1 - sum_i t_i, t1, t2, ...) on the nonnegative mass-at-most-1
    set, measured in the max(positive part, negative part) renorming of l1.
    An affine fixed-point-free isometry in that norm."""

    def apply(x: SeqVec) -> SeqVec:
        s = math.fsum(v for _, v in x.support)
        if x.tail != 0.0:
            raise NotInSpaceError("renormed_l1 is defined on l1 (tail 0)")
        out = {1: 1.0 - s}
        for i, v in x.support:
            out[i + 1] = v
        return SeqVec.from_dict(out, 0.0)

    return MapInstance(
        name="renormed_l1",
        params={},
        domain=sub_simplex(1.0),
        norm=MPN,
        apply=apply,
        claims=ClaimProfile(
            alpha=0.5,
            holder_constant=1.0,
            uniform=True,
            affine=True,
            isometry=True,
            classical_lipschitz=1.0,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula="T(x) = (1 - sum t_i, t1, t2, ...), norm max(||x+||_1, ||x-||_1)",
        notes=("an isometry is uniformly a-Holder nonexpansive for every "
               "exponent on a diameter-1 set; alpha = 0.5 is the "
               "representative exponent used for ratio checks"),
    )


def l1_ball_composite_map(alpha: float = 0.5, lam: float = 0.5) -> MapInstance:
    """The composite T = shift . abs . sphere-retract . ball-retract on the
    unit l1 ball, landing on the small positive sphere of radius
    r = (lam/8^th)^(1/(1-th))/4 with th = sqrt(a).  Claimed uniformly
    a-Holder lam-contractive; the claim is recorded report-only because the
    retraction constants are certified elsewhere, not here."""
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    if not 0.0 < lam < 1.0:
        raise InvalidParameterError("lam", "requires 0 < lam < 1")
    theta = math.sqrt(alpha)
    r = 0.25 * (lam / 8.0 ** theta) ** (1.0 / (1.0 - theta))

    def to_sphere(x: SeqVec) -> SeqVec:
        g = radial_retract(x, r, L1)
        s = l1_sphere_retract(g, r)
        return abs_retract(s)

    def apply(x: SeqVec) -> SeqVec:
        return shift_right(to_sphere(x))

    def oracle(x: SeqVec, n: int) -> SeqVec:
        # T^n = shift^n . abs . sphere . ball: the shift fixes the landed
        # sphere pointwise apart from moving it, and the retractions fix it.
        if n == 0:
            return x
        base = to_sphere(x)
        return SeqVec(tuple((i + n, v) for i, v in base.support), 0.0)

    def witnesses(budget: int) -> list[SeqVec]:
        out = []
        for n in _checkpoint_range(budget, 64):
            if n > 512:
                break
            out.append(SeqVec.from_dict({i: r / n for i in range(1, n + 1)}))
        return out

    return MapInstance(
        name="l1_ball_composite",
        params={"alpha": alpha, "lambda": lam, "radius": r},
        domain=ball(1.0, L1),
        norm=L1,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=lam,
            uniform=True,
            hard=False,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.empty(),
        ),
        formula=("T = shift . abs . sphere_retract(r) . ball_retract(r), "
                 "r = (lam/8^sqrt(a))^(1/(1-sqrt(a)))/4"),
        iterate_oracle=oracle,
        witness_family=witnesses,
        notes=("report-only Holder claim; the iterate identity "
               "T^n = shift^n . (abs . sphere . ball) holds because the "
               "shift maps the landed sphere into itself"),
    )


# ---------------------------------------------------------------------------
# Combinators

_STAR_SHAPED = ("ball", "positive_ball", "coefficient_box", "c_interval",
                "sub_simplex")


def lambda_scale(inner: MapInstance, lam: float) -> MapInstance:
    """x -> inner(lam * x).  Needs a domain star-shaped about 0."""
    if not 0.0 < lam < 1.0:
        raise InvalidParameterError("lam", "requires 0 < lam < 1")
    if inner.domain.kind not in _STAR_SHAPED:
        raise InvalidCompositionError(
            f"lambda_scale needs a domain star-shaped about 0, "
            f"not {inner.domain.kind}"
        )

    def apply(x: SeqVec) -> SeqVec:
        return inner.apply(scale(lam, x))

    return MapInstance(
        name=f"lambda_scale({inner.name}, {lam})",
        params={"lambda": lam, "inner": inner.name},
        domain=inner.domain,
        norm=inner.norm,
        apply=apply,
        claims=replace(inner.claims, fixed_points=FixedPointSet.unknown(),
                       displacement_bound=None),
        formula=f"x -> inner(lam x) with inner: {inner.formula}",
        notes="orbit displacements of the scaled map decay geometrically",
    )


def holderize(T: MapInstance, epsilon: float, alpha: float = 0.5) -> MapInstance:
    """Blend a nonexpansive T with the identity through the radial weight
    c(x) = eps ||x||^a / (4 (1 + ||x||^a)), yielding an a-Holder map with
    constant eps + diam^(1-a) that stays eps-close to T and keeps its fixed
    points."""
    if not 0.0 < epsilon < 1.0:
        raise InvalidParameterError("epsilon", "requires 0 < epsilon < 1")
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    cl = T.claims.classical_lipschitz
    if cl is None or cl > 1.0:
        raise InvalidCompositionError(
            "holderize needs a classically nonexpansive inner map"
        )

    def weight(x: SeqVec) -> float:
        na = norm(x, T.norm) ** alpha
        return epsilon * na / (4.0 * (1.0 + na))

    def apply(x: SeqVec) -> SeqVec:
        c = weight(x)
        return axpy(c, x, 1.0 - c, T.apply(x))

    diam = T.domain.diameter_bound()
    return MapInstance(
        name=f"holderize({T.name}, {epsilon})",
        params={"epsilon": epsilon, "alpha": alpha, "inner": T.name},
        domain=T.domain,
        norm=T.norm,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=epsilon + diam ** (1.0 - alpha),
            uniform=False,
            displacement_bound=T.claims.displacement_bound,
            fixed_points=T.claims.fixed_points,
        ),
        formula="T_eps(x) = c(x) x + (1 - c(x)) T(x), c = eps||x||^a/(4(1+||x||^a))",
        notes="||T_eps(x) - T(x)|| <= eps/4 * ||x - Tx|| <= eps on unit-ball domains",
    )


def lift_to_ball(F: MapInstance, r: float, alpha: float, lam: float) -> MapInstance:
    """Conjugate a nonexpansive F on the unit ball into the radius-r ball:
    T(x) = r F(R(x)/r) with R the radial retraction.  For 2 L r^(1-a) <= lam
    the lift is a-Holder lam-contractive, and displacements transport as
    d(T) <= r d(F)."""
    if F.domain.kind != "ball" or F.domain.r != 1.0:
        raise InvalidCompositionError("lift_to_ball needs an inner map on the unit ball")
    L = F.claims.classical_lipschitz
    if L is None:
        raise InvalidCompositionError(
            "lift_to_ball needs an inner map with a classical Lipschitz constant"
        )
    if not 0.0 < alpha < 1.0:
        raise InvalidParameterError("alpha", "requires 0 < alpha < 1")
    if not r > 0.0:
        raise InvalidParameterError("r", "requires r > 0")
    if not 2.0 * L * r ** (1.0 - alpha) <= lam:
        raise InvalidParameterError("r", "requires 2 L r^(1-alpha) <= lam")

    def apply(x: SeqVec) -> SeqVec:
        rx = radial_retract(x, r, F.norm)
        return scale(r, F.apply(scale(1.0 / r, rx)))

    inner_disp = F.claims.displacement_bound
    inner_family = F.witness_family

    def witnesses(budget: int) -> list[SeqVec]:
        pts = [scale(r, p) for p in F.domain.canonical_points()]
        if inner_family is not None:
            pts.extend(scale(r, p) for p in inner_family(budget))
        return pts

    return MapInstance(
        name=f"lift_to_ball({F.name}, {r})",
        params={"r": r, "alpha": alpha, "lambda": lam, "inner": F.name},
        domain=ball(1.0, F.norm),
        norm=F.norm,
        apply=apply,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=lam,
            uniform=L <= 1.0,
            displacement_bound=None if inner_disp is None else r * inner_disp,
            fixed_points=(FixedPointSet.empty()
                          if F.claims.fixed_points.kind == "empty"
                          else FixedPointSet.unknown()),
        ),
        formula="T(x) = r F(R(x)/r), R the radial retraction onto the r-ball",
        witness_family=witnesses,
        notes="witnesses transport by scaling: ||rx - T(rx)|| = r ||x - F(x)|| inside the r-ball",
    )


def constant_map(value: SeqVec, domain: DomainSpec, kind: NormKind,
                 alpha: float = 2.0) -> MapInstance:
    """x -> value.  With alpha > 1 this is the only shape a Holder map with
    that exponent can take on a convex set, which is what the exponent probe
    checks."""
    if not alpha > 1.0:
        raise InvalidParameterError("alpha", "requires alpha > 1 for the probe")
    if not domain.contains(value):
        raise InvalidParameterError("value", "must belong to the domain")

    return MapInstance(
        name="constant",
        params={"alpha": alpha},
        domain=domain,
        norm=kind,
        apply=lambda x: value,
        claims=ClaimProfile(
            alpha=alpha,
            holder_constant=0.5,
            uniform=True,
            displacement_bound=0.0,
            fixed_points=FixedPointSet.singleton(value),
        ),
        formula="T(x) = c",
        notes="exponents above 1 force constancy on convex domains",
    )


# ---------------------------------------------------------------------------
# Scalar orbit for exponents above 1


@dataclass(frozen=True)
class ScalarOrbit:
    """Orbit of a scalar map T with |T(s) - T(t)| <= L |s - t|^alpha, alpha
    above 1: values, the actual displacement trace, and the majorant trace
    rho_{k+1} = L rho_k^alpha seeded at the first displacement."""

    values: tuple[float, ...]
    displacements: tuple[float, ...]
    majorant: tuple[float, ...]
    converged: bool


def banach_alpha_gt1_iterate(T_rule: Callable[[float], float], x0: float,
                             L: float, alpha: float, n: int) -> ScalarOrbit:
    if not alpha > 1.0:
        raise InvalidParameterError("alpha", "requires alpha > 1")
    if not 0.0 < L < 1.0:
        raise InvalidParameterError("L", "requires 0 < L < 1")
    if n < 0:
        raise InvalidParameterError("n", "requires n >= 0")
    first = abs(T_rule(x0) - x0)
    if first > 1.0:
        raise InvalidParameterError("x0", "requires |T(x0) - x0| <= 1")

    values = [x0]
    displacements: list[float] = []
    converged = False
    x = x0
    for _ in range(n):
        y = T_rule(x)
        rho = abs(y - x)
        values.append(y)
        displacements.append(rho)
        x = y
        if rho < 1e-15:
            converged = True
            break
    majorant: list[float] = []
    if displacements:
        rho = displacements[0]
        majorant.append(rho)
        for _ in range(len(displacements) - 1):
            rho = L * rho ** alpha
            majorant.append(rho)
    return ScalarOrbit(tuple(values), tuple(displacements), tuple(majorant),
                       converged)


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class ParamSpec:
    name: str
    default: object
    constraint: str


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    factory: Callable[..., MapInstance]
    params: tuple[ParamSpec, ...]
    summary: str
    has_oracle: bool = False


def _entry(name, factory, params, summary, has_oracle=False):
    return CatalogEntry(name, factory, tuple(params), summary, has_oracle)


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        _entry("prus", prus_map,
               [ParamSpec("alpha", 0.5, "0 < alpha < 1")],
               "fixed-point-free Holder nonexpansive map on the sup ball of c"),
        _entry("norming", norming_map,
               [ParamSpec("alpha", 0.5, "0 < alpha < 1")],
               "rank-one map on the l2 ball with fixed point e1 and closed-form "
               "iterates at alpha = 1/2", has_oracle=True),
        _entry("baseline_c", baseline_c_map, [],
               "nonexpansive fixed-point-free base map lifted into small balls"),
        _entry("shift_simplex", shift_simplex_map,
               [ParamSpec("p", 1.0, "p >= 1"),
                ParamSpec("alpha", 0.5, "0 < alpha < 1"),
                ParamSpec("lambda", 0.5, "0 < lambda < 1")],
               "forward shift on a mass slice, uniformly Holder contractive"),
        _entry("affine_mixing", affine_mixing_map,
               [ParamSpec("L", 2.0, "L > 1"),
                ParamSpec("lambda", 0.75, "1/L < lambda <= 1"),
                ParamSpec("alpha", 0.5, "0 < alpha < 1")],
               "mass-preserving affine mixing with a report-only expansion floor"),
        _entry("deficiency", deficiency_map,
               [ParamSpec("p", 2.0, "p >= 1"),
                ParamSpec("alpha", 0.5, "0 < alpha < 1")],
               "Holder nonexpansive map with small but positive displacement bound"),
        _entry("goebel_kirk", goebel_kirk_map,
               [ParamSpec("alpha", 0.5, "0 < alpha < 1")],
               "asymptotically Holder nonexpansive, profile (n+1)/n * 2^(1-a)"),
        _entry("hyperconvex", hyperconvex_map,
               [ParamSpec("N", 4, "N^alpha >= 2"),
                ParamSpec("alpha", 0.5, "0 < alpha < 1")],
               "uniformly Holder nonexpansive, fixed point free on [0, 1/N] coords",
               has_oracle=True),
        _entry("c0_family", c0_family_map,
               [ParamSpec("delta", 0.5, "0 < delta < 1"),
                ParamSpec("q", 0.25, "0 < q <= 1 - delta"),
                ParamSpec("alpha", 0.9, "0 < alpha <= 1")],
               "exponent-continuous family on a band, fixed point free below a = 1"),
        _entry("affine_cube", affine_cube_map,
               [ParamSpec("r", 0.125, "(2r)^(1-alpha) <= lambda"),
                ParamSpec("alpha", 0.5, "0 < alpha < 1"),
                ParamSpec("lambda", 0.5, "0 < lambda < 1")],
               "affine box map with exact corner witnesses r*beta_{m+1}"),
        _entry("renormed_l1", renormed_l1_map, [],
               "affine fixed-point-free isometry in the max(pos, neg) renorming"),
        _entry("l1_ball_composite", l1_ball_composite_map,
               [ParamSpec("alpha", 0.5, "0 < alpha < 1"),
                ParamSpec("lambda", 0.5, "0 < lambda < 1")],
               "retract-to-sphere composite on the unit l1 ball (report-only claim)",
               has_oracle=True),
    ]
}

def retraction_map(name: str, r: float = 1.0) -> MapInstance:
    """Wrap a named retraction as a self-map so the verifier can sample it.

    The domain is a set the retraction acts on (strictly larger than the
    target where that makes the measurement interesting); the claimed
    constant is the tag's Lipschitz budget and holds for every iterate
    because retractions are idempotent."""
    if not r > 0.0:
        raise InvalidParameterError("r", "requires r > 0")
    tag = RETRACTION_TAGS[name]
    if name == "radial":
        domain, kind = ball(2.0 * r, L2), L2
        apply = lambda x: radial_retract(x, r, L2)  # noqa: E731
        formula = "R(x) = x if ||x|| <= r else r x / ||x||"
    elif name == "abs":
        domain, kind = ball(r, L1), L1
        apply = lambda x: abs_retract(x)  # noqa: E731
        formula = "R((t_j)) = (|t_j|)"
    elif name == "positive_part":
        domain, kind = ball(r, L2), L2
        apply = lambda x: positive_part(x)  # noqa: E731
        formula = "R((t_j)) = (max(t_j, 0))"
    elif name == "clamp":
        domain, kind = coefficient_box(2.0 * r), SUP
        apply = lambda x: clamp_retract(x, r)  # noqa: E731
        formula = "R((t_j)) = (min(t_j, r)) on the nonnegative cone"
    elif name == "l1_sphere":
        domain, kind = ball(r, L1), L1
        apply = lambda x: l1_sphere_retract(x, r)  # noqa: E731
        formula = ("R(x) = (r - 2||x||_1) e_1 + 2 S(x) below mass r/2, "
                   "else (x - Q(x)) + 2 S(Q(x)); identity on the sphere")
    else:
        from .errors import UnknownNameError
        import difflib

        raise UnknownNameError(
            name, tuple(difflib.get_close_matches(name, RETRACTION_CATALOG, n=3))
        )
    claims = ClaimProfile(
        alpha=1.0,
        holder_constant=tag.claimed_lipschitz,
        uniform=True,
        hard=True,
        classical_lipschitz=tag.claimed_lipschitz,
        displacement_bound=0.0,
        fixed_points=FixedPointSet.unknown(),
    )
    return MapInstance(
        name=name,
        params={"r": r},
        domain=domain,
        norm=kind,
        apply=apply,
        claims=claims,
        formula=formula,
        notes=f"retraction of {tag.source_set} onto {tag.target_set}; "
              f"claimed Lipschitz constant {tag.claimed_lipschitz:g}",
    )


RETRACTION_CATALOG: dict[str, CatalogEntry] = {
    name: _entry(
        name,
        lambda r=1.0, _n=name: retraction_map(_n, r),
        [ParamSpec("r", 1.0, "r > 0")],
        f"retraction wrapper: {RETRACTION_TAGS[name].source_set} -> "
        f"{RETRACTION_TAGS[name].target_set} "
        f"(Lipschitz {RETRACTION_TAGS[name].claimed_lipschitz:g})",
    )
    for name in ("radial", "abs", "positive_part", "clamp", "l1_sphere")
}

_INT_PARAMS = {"N", "breadth"}


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(CATALOG))


def retraction_names() -> tuple[str, ...]:
    return tuple(sorted(RETRACTION_CATALOG))


def build_map(name: str, params: Mapping[str, object] | None = None,
              breadth: int | None = None) -> MapInstance:
    """Construct a registered map or retraction wrapper by name.  JSON
    parameter names are used ('lambda' maps onto the factory's lam
    argument)."""
    from .errors import UnknownNameError
    import difflib

    if name in CATALOG:
        entry = CATALOG[name]
    elif name in RETRACTION_CATALOG:
        entry = RETRACTION_CATALOG[name]
    else:
        known = list(CATALOG) + list(RETRACTION_CATALOG)
        suggestions = tuple(difflib.get_close_matches(name, known, n=3))
        raise UnknownNameError(name, suggestions)
    kwargs: dict[str, object] = {}
    for key, value in (params or {}).items():
        if key not in {p.name for p in entry.params}:
            raise InvalidParameterError(
                key, f"not a parameter of {name!r} "
                     f"(expected {', '.join(p.name for p in entry.params) or 'none'})"
            )
        arg = "lam" if key == "lambda" else key
        kwargs[arg] = int(value) if key in _INT_PARAMS else value
    if breadth is not None:
        import inspect

        if "breadth" in inspect.signature(entry.factory).parameters:
            kwargs["breadth"] = breadth
            return entry.factory(**kwargs)
        inst = entry.factory(**kwargs)
        return replace(inst, domain=inst.domain.with_breadth(breadth))
    return entry.factory(**kwargs)
