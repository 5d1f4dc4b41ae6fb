"""Bounded convex sets the catalog maps live on, with seeded samplers.

Each DomainSpec carries a membership test (tolerance-slackened inequalities,
default tol 1e-12), a deterministic sampler whose law has full support over
the breadth-truncated face of the set (default breadth 64), and a short list
of canonical points used as deterministic witnesses by the verifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Union

import numpy as np

from .errors import InvalidBudgetError, InvalidParameterError, NotInSpaceError
from .seqvec import SeqVec, NormKind, ZERO, basis_vector, norm, scale

__all__ = [
    "DomainSpec",
    "ball",
    "positive_ball",
    "simplex",
    "sub_simplex",
    "coefficient_box",
    "sigma_band",
    "c_interval",
    "as_rng",
]

DEFAULT_TOL = 1e-12
DEFAULT_BREADTH = 64

_KINDS = (
    "ball",
    "positive_ball",
    "simplex",
    "sub_simplex",
    "coefficient_box",
    "sigma_band",
    "c_interval",
)

SeedLike = Union[int, np.random.Generator]


def as_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class DomainSpec:
    """One bounded convex subset of the sequence model.

    kind selects the shape; the parameter fields used depend on it:
      ball / positive_ball:  r, norm
      simplex:               p, mass      (lp vectors with sum == mass)
      sub_simplex:           mass_cap     (nonnegative, sum <= mass_cap)
      coefficient_box:       r            (c0 vectors with coords in [0, r])
      sigma_band:            delta, q     (t1 = 1-delta, q^i <= t_i <= 1-delta)
      c_interval:            cap          (coords and tail in [0, cap])
    """

    kind: str
    r: float | None = None
    norm: NormKind | None = None
    p: float | None = None
    mass: float | None = None
    mass_cap: float | None = None
    delta: float | None = None
    q: float | None = None
    cap: float | None = None
    tol: float = DEFAULT_TOL
    breadth: int = DEFAULT_BREADTH

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise InvalidParameterError("kind", f"must be one of {', '.join(_KINDS)}")
        if not self.tol >= 0.0:
            raise InvalidParameterError("tol", "requires tol >= 0")
        if self.breadth < 1:
            raise InvalidBudgetError(f"breadth {self.breadth} is below 1")

    # -- membership ---------------------------------------------------------

    def sigma(self, i: int) -> float:
        """Band floor q^i (sigma_band only)."""
        return self.q ** i

    @cached_property
    def _sigma_floors(self) -> "np.ndarray":
        return np.array([self.sigma(i) for i in range(2, self.breadth + 1)])

    @cached_property
    def _sigma_floor_list(self) -> list[float]:
        return self._sigma_floors.tolist()

    @cached_property
    def _sigma_spans(self) -> "np.ndarray":
        return (1.0 - self.delta) - self._sigma_floors

    def contains(self, x: SeqVec) -> bool:
        tol = self.tol
        k = self.kind
        if k in ("ball", "positive_ball"):
            try:
                if norm(x, self.norm) > self.r + tol:
                    return False
            except NotInSpaceError:
                return False
            if k == "positive_ball":
                if x.tail < -tol:
                    return False
                return all(v >= -tol for _, v in x.support)
            return True
        if k == "simplex":
            if x.tail != 0.0:
                return False
            if any(v < -tol for _, v in x.support):
                return False
            return abs(math.fsum(v for _, v in x.support) - self.mass) <= tol
        if k == "sub_simplex":
            if x.tail != 0.0:
                return False
            if any(v < -tol for _, v in x.support):
                return False
            return math.fsum(v for _, v in x.support) <= self.mass_cap + tol
        if k == "coefficient_box":
            if x.tail != 0.0:
                return False
            return all(-tol <= v <= self.r + tol for _, v in x.support)
        if k == "sigma_band":
            if x.tail != 0.0:
                return False
            top = 1.0 - self.delta
            d = x._dict
            if abs(d.get(1, 0.0) - top) > tol:
                return False
            floors = self._sigma_floor_list
            for i in range(2, self.breadth + 1):
                t = d.get(i, 0.0)
                if t < floors[i - 2] - tol or t > top + tol:
                    return False
            return True
        # c_interval
        if not (-tol <= x.tail <= self.cap + tol):
            return False
        return all(-tol <= v <= self.cap + tol for _, v in x.support)

    # -- sampling ------------------------------------------------------------

    def sample(self, seed: SeedLike, breadth: int | None = None) -> SeqVec:
        """One random member.  Deterministic given an integer seed; pass a
        Generator to draw a stream.  The law charges every region of the
        breadth-truncated face with positive probability."""
        rng = as_rng(seed)
        b = self.breadth if breadth is None else breadth
        if b < 1:
            raise InvalidBudgetError(f"breadth {b} is below 1")
        k = self.kind

        if k == "sigma_band":
            top = 1.0 - self.delta
            if b == self.breadth:
                floors, spans = self._sigma_floors, self._sigma_spans
            else:
                floors = np.array([self.sigma(i) for i in range(2, b + 1)])
                spans = top - floors
            vals = (floors + spans * rng.random(b - 1)).tolist()
            pairs = [(1, top)]
            pairs += zip(range(2, b + 1), vals)
            # floors are positive, so the support is already canonical
            return SeqVec(tuple(pairs), 0.0)

        # a uniformly random support of random size, via order statistics
        size = int(rng.integers(1, b + 1))
        if size == b:
            idx = range(1, b + 1)
        else:
            u = rng.random(b)
            idx = np.sort(np.argpartition(u, size)[:size])
            idx += 1
            idx = idx.tolist()

        if k in ("ball", "positive_ball"):
            lo = 0.0 if k == "positive_ball" else -1.0
            raw = rng.uniform(lo, 1.0, size=size)
            if self.norm.variant == "sup":
                tail = 0.0
                coin = rng.random(2)
                if coin[0] < 0.5:
                    tail = self.r * (lo + (1.0 - lo) * float(coin[1]))
                return SeqVec.from_sorted(
                    zip(idx, (self.r * raw).tolist()), tail
                )
            # lp / max_pos_neg_l1 members need tail 0; rescale to a random radius
            x = SeqVec.from_sorted(zip(idx, raw.tolist()), 0.0)
            n = norm(x, self.norm)
            if n == 0.0:
                return SeqVec.from_sorted(
                    [(1, self.r * float(rng.random()))], 0.0
                )
            rho = self.r * float(rng.random()) ** (1.0 / size)
            return scale(rho / n, x)

        if k in ("simplex", "sub_simplex"):
            g = rng.exponential(1.0, size=size)  # Dirichlet(1,...,1) weights
            mass = (self.mass if k == "simplex"
                    else self.mass_cap * float(rng.random()))
            vals = (mass / g.sum()) * g
            total = math.fsum(vals.tolist())
            if total > 0.0:
                vals = vals * (mass / total)
            return SeqVec.from_sorted(zip(idx, vals.tolist()), 0.0)

        hi = self.r if k == "coefficient_box" else self.cap
        vals = rng.uniform(0.0, hi, size=size)
        tail = 0.0
        if k == "c_interval":
            coin = rng.random(2)
            if coin[0] < 0.5:
                tail = hi * float(coin[1])
        return SeqVec.from_sorted(zip(idx, vals.tolist()), tail)

    # -- canonical points ----------------------------------------------------

    def canonical_points(self) -> tuple[SeqVec, ...]:
        k = self.kind
        if k == "ball":
            pts = [ZERO, basis_vector(1, self.r), basis_vector(1, -self.r),
                   basis_vector(2, self.r), basis_vector(1, self.r / 2)]
            if self.norm.variant == "sup":
                pts.append(SeqVec((), self.r))
                pts.append(SeqVec((), -self.r))
            return tuple(pts)
        if k == "positive_ball":
            pts = [ZERO, basis_vector(1, self.r), basis_vector(2, self.r),
                   basis_vector(1, self.r / 2)]
            if self.norm.variant == "sup":
                pts.append(SeqVec((), self.r))
            return tuple(pts)
        if k == "simplex":
            m = self.mass
            spread_n = min(8, self.breadth)
            spread = SeqVec.from_dict({i: m / spread_n for i in range(1, spread_n + 1)})
            return (basis_vector(1, m), basis_vector(2, m),
                    SeqVec.from_dict({1: m / 2, 2: m / 2}), spread)
        if k == "sub_simplex":
            c = self.mass_cap
            return (ZERO, basis_vector(1, c), basis_vector(1, c / 2),
                    SeqVec.from_dict({1: c / 2, 2: c / 2}))
        if k == "coefficient_box":
            r = self.r
            full = SeqVec.from_dict({i: r for i in range(1, min(8, self.breadth) + 1)})
            return (ZERO, basis_vector(1, r), full, basis_vector(self.breadth, r))
        if k == "sigma_band":
            top = 1.0 - self.delta
            b = self.breadth
            geo = SeqVec.from_dict({i: top ** i for i in range(1, b + 1)})
            floor = SeqVec.from_dict(
                {1: top, **{i: self.sigma(i) for i in range(2, b + 1)}}
            )
            ceil = SeqVec.from_dict({i: top for i in range(1, b + 1)})
            return (geo, floor, ceil)
        # c_interval
        c = self.cap
        return (ZERO, SeqVec((), c), basis_vector(1, c),
                SeqVec(((1, c),), c / 2))

    def diameter_bound(self) -> float:
        """A cheap upper bound for the diameter in this domain's natural norm
        (used only to size claimed constants, so looseness is safe)."""
        k = self.kind
        if k in ("ball", "positive_ball"):
            return 2.0 * self.r
        if k == "simplex":
            return 2.0 * self.mass
        if k == "sub_simplex":
            return 2.0 * self.mass_cap
        if k == "coefficient_box":
            return self.r
        if k == "sigma_band":
            return 1.0 - self.delta
        return self.cap

    def with_breadth(self, breadth: int) -> "DomainSpec":
        return replace(self, breadth=breadth)

    def describe(self) -> str:
        k = self.kind
        if k == "ball":
            return f"ball of radius {self.r} in the {self.norm.label()} norm"
        if k == "positive_ball":
            return (f"nonnegative part of the radius-{self.r} ball "
                    f"in the {self.norm.label()} norm")
        if k == "simplex":
            return f"l{self.p:g} simplex slice of mass {self.mass}"
        if k == "sub_simplex":
            return f"nonnegative vectors of l1 mass at most {self.mass_cap}"
        if k == "coefficient_box":
            return f"c0 coefficient box [0, {self.r}] per coordinate"
        if k == "sigma_band":
            return (f"band t1 = {1.0 - self.delta}, {self.q}^i <= t_i <= "
                    f"{1.0 - self.delta} up to breadth {self.breadth}")
        return f"coords and tail in [0, {self.cap}]"


# -- factories ---------------------------------------------------------------

def ball(r: float, kind: NormKind, tol: float = DEFAULT_TOL,
         breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not r > 0.0:
        raise InvalidParameterError("r", "requires r > 0")
    return DomainSpec("ball", r=float(r), norm=kind, tol=tol, breadth=breadth)


def positive_ball(r: float, kind: NormKind, tol: float = DEFAULT_TOL,
                  breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not r > 0.0:
        raise InvalidParameterError("r", "requires r > 0")
    return DomainSpec("positive_ball", r=float(r), norm=kind, tol=tol, breadth=breadth)


def simplex(p: float, mass: float, tol: float = DEFAULT_TOL,
            breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not p >= 1.0:
        raise InvalidParameterError("p", "requires p >= 1")
    if not mass > 0.0:
        raise InvalidParameterError("mass", "requires mass > 0")
    return DomainSpec("simplex", p=float(p), mass=float(mass), tol=tol, breadth=breadth)


def sub_simplex(mass_cap: float, tol: float = DEFAULT_TOL,
                breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not mass_cap > 0.0:
        raise InvalidParameterError("mass_cap", "requires mass_cap > 0")
    return DomainSpec("sub_simplex", mass_cap=float(mass_cap), tol=tol, breadth=breadth)


def coefficient_box(r: float, tol: float = DEFAULT_TOL,
                    breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not r > 0.0:
        raise InvalidParameterError("r", "requires r > 0")
    return DomainSpec("coefficient_box", r=float(r), tol=tol, breadth=breadth)


def sigma_band(delta: float, q: float, tol: float = DEFAULT_TOL,
               breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not 0.0 < delta < 1.0:
        raise InvalidParameterError("delta", "requires 0 < delta < 1")
    if not 0.0 < q <= 1.0 - delta:
        raise InvalidParameterError("q", "requires 0 < q <= 1 - delta")
    return DomainSpec("sigma_band", delta=float(delta), q=float(q), tol=tol,
                      breadth=breadth)


def c_interval(cap: float, tol: float = DEFAULT_TOL,
               breadth: int = DEFAULT_BREADTH) -> DomainSpec:
    if not cap > 0.0:
        raise InvalidParameterError("cap", "requires cap > 0")
    return DomainSpec("c_interval", cap=float(cap), tol=tol, breadth=breadth)
