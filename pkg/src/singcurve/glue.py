"""Gluing data for singular curves Y with a given normalization C.

A singular closed point of Y is recorded by its degree d_P and the degrees
d_Q of the closed points of C lying over it (a `SingularFiber`).  Its local
genus drop, summed over the d_P geometric points, is sum(d_Q) - d_P, which is
also its share of Delta_Y.  Unibranch thickenings add arithmetic genus and
leave every point count alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .curve import ClosedPoint, CurveModel, closed_points_of_degree, contains
from .gf import DEFAULT_CAP


class GluingError(ValueError):
    pass


@dataclass(frozen=True)
class SingularFiber:
    d_P: int
    branches: tuple[int, ...]
    points: tuple[ClosedPoint, ...] | None = None

    def __post_init__(self):
        if self.points is not None:
            pts = tuple(sorted(self.points))
            object.__setattr__(self, "points", pts)
            object.__setattr__(self, "branches", tuple(pt.degree for pt in pts))
            if len(set(pts)) != len(pts):
                raise GluingError("a fiber lists the same closed point twice")
        else:
            object.__setattr__(self, "branches", tuple(sorted(self.branches)))
        if self.d_P < 1 or not self.branches:
            raise GluingError(f"bad fiber {self.d_P}, {self.branches}")
        for d in self.branches:
            if d < self.d_P or d % self.d_P:
                raise GluingError(f"branch degree {d} is not a multiple of d_P={self.d_P}")

    @property
    def geometric_size(self) -> int:
        """#u^{-1}(P) for one geometric point P of the orbit."""
        return sum(self.branches) // self.d_P

    @property
    def delta(self) -> int:
        return sum(self.branches) - self.d_P

    def sort_key(self):
        return (self.d_P, self.branches, self.points or ())

    @property
    def is_singular(self) -> bool:
        return self.delta > 0

    @property
    def is_concrete(self) -> bool:
        return self.points is not None

    def to_json(self) -> dict:
        out = {"dP": self.d_P, "branches": list(self.branches)}
        if self.points is not None:
            out["points"] = [pt.to_json() for pt in self.points]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SingularFiber":
        pts = obj.get("points")
        if pts is not None:
            fiber = cls(obj["dP"], (), tuple(ClosedPoint.from_json(o) for o in pts))
            if list(fiber.branches) != sorted(obj["branches"]):
                raise GluingError("branch degrees do not match the attached points")
            return fiber
        return cls(obj["dP"], tuple(obj["branches"]))


@dataclass(frozen=True)
class UnibranchThickening:
    """Replace O_{C,Q} by F + m^{y+1} at each geometric point of a degree-`degree` closed point."""

    degree: int
    y: int
    location: ClosedPoint | None = None

    def __post_init__(self):
        if self.degree < 1 or self.y < 1:
            raise GluingError("thickening needs degree >= 1 and y >= 1")
        if self.location is not None and self.location.degree != self.degree:
            raise GluingError("thickening degree does not match its location")

    def sort_key(self):
        return (self.degree, self.y, (self.location,) if self.location else ())

    @property
    def genus_increment(self) -> int:
        return self.degree * self.y

    def to_json(self) -> dict:
        out = {"degree": self.degree, "y": self.y}
        if self.location is not None:
            out["point"] = self.location.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "UnibranchThickening":
        loc = ClosedPoint.from_json(obj["point"]) if "point" in obj else None
        return cls(obj["degree"], obj["y"], loc)


@dataclass(frozen=True)
class SingularCurve:
    """Normalization plus gluing data.  Fibers and thickenings are kept sorted,
    so equal gluing data compare equal whatever order it was assembled in."""

    normalization: CurveModel | None
    fibers: tuple[SingularFiber, ...] = ()
    thickenings: tuple[UnibranchThickening, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(sorted(self.fibers, key=SingularFiber.sort_key)))
        object.__setattr__(self, "thickenings", tuple(sorted(self.thickenings, key=UnibranchThickening.sort_key)))
        used = [pt for fb in self.fibers if fb.points for pt in fb.points]
        used += [th.location for th in self.thickenings if th.location is not None]
        if len(set(used)) != len(used):
            raise GluingError("fibers and thickenings must use pairwise distinct closed points")
        C = self.normalization
        if C is not None:
            for pt in used:
                if not contains(C, pt.representative):
                    raise GluingError(f"{pt} is not a point of {C}")

    @property
    def delta(self) -> int:
        return sum(fb.delta for fb in self.fibers)

    @property
    def arithmetic_genus(self) -> int:
        g = self.normalization.genus if self.normalization is not None else 0
        return g + self.delta + sum(th.genus_increment for th in self.thickenings)

    @property
    def is_concrete(self) -> bool:
        return all(fb.is_concrete for fb in self.fibers)

    @property
    def used_points(self) -> set[ClosedPoint]:
        out = {pt for fb in self.fibers if fb.points for pt in fb.points}
        return out | {th.location for th in self.thickenings if th.location is not None}

    def with_fiber(self, fiber: SingularFiber) -> "SingularCurve":
        return SingularCurve(self.normalization, self.fibers + (fiber,), self.thickenings)

    def with_thickening(self, th: UnibranchThickening) -> "SingularCurve":
        return SingularCurve(self.normalization, self.fibers, self.thickenings + (th,))

    def to_json(self) -> dict:
        return {
            "curve": self.normalization.to_json() if self.normalization is not None else None,
            "fibers": [fb.to_json() for fb in self.fibers],
            "thickenings": [th.to_json() for th in self.thickenings],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SingularCurve":
        C = CurveModel.from_json(obj["curve"]) if obj.get("curve") else None
        return cls(
            C,
            tuple(SingularFiber.from_json(o) for o in obj.get("fibers", ())),
            tuple(UnibranchThickening.from_json(o) for o in obj.get("thickenings", ())),
        )


def genus_and_delta(Y: SingularCurve) -> tuple[int, int]:
    return Y.arithmetic_genus, Y.delta


# -- constructors -------------------------------------------------------------


def glue_orbit(Y: SingularCurve, point: ClosedPoint) -> SingularCurve:
    """One gluing step: the orbit of `point` goes to a single rational point."""
    if point in Y.used_points:
        raise GluingError(f"{point} is already used by the gluing data")
    return Y.with_fiber(SingularFiber(1, (), (point,)))


def build_selective_glued_curve(
    C: CurveModel,
    ts: Sequence[int],
    cap: int = DEFAULT_CAP,
    order: Sequence[int] | None = None,
) -> SingularCurve:
    """C_{[q; t_1, ..., t_s]}: glue every closed point of degree t in ts.

    `order`, if given, is a permutation of the closed points (listed by degree
    then representative) fixing the sequence of gluing steps.
    """
    ts = list(ts)
    if not ts or any(t < 2 for t in ts) or any(a >= b for a, b in zip(ts, ts[1:])):
        raise GluingError(f"degrees must be a nonempty strictly increasing list of ints >= 2, got {ts}")
    points = [pt for t in ts for pt in closed_points_of_degree(C, t, cap)]
    if order is not None:
        if sorted(order) != list(range(len(points))):
            raise GluingError("order must be a permutation of the closed points")
        points = [points[i] for i in order]
    Y = SingularCurve(C)
    for pt in points:
        Y = glue_orbit(Y, pt)
    return Y


def build_glued_curve(C: CurveModel, n: int, cap: int = DEFAULT_CAP, order: Sequence[int] | None = None) -> SingularCurve:
    """C_{[q,n]}: glue every closed point of degree 2..n."""
    if n < 2:
        raise GluingError(f"n must be >= 2, got {n}")
    return build_selective_glued_curve(C, range(2, n + 1), cap, order)


# -- closed forms ---------------------------------------------------------------


def glued_rational_count(N: dict[int, int], O: dict[int, int], ts: Iterable[int]) -> int:
    """#Y(F_q) = N_1 + sum of O_t over the glued degrees."""
    return N[1] + sum(O[t] for t in ts)


def telescoping_count(N: dict[int, int], ts: Iterable[int]) -> Fraction:
    """N_1 + sum (N_t - N_{t-1}) / t, the expression printed for C_{[q; ts]}.

    It agrees with the orbit count for ts = [2]; for t >= 3 it is only a
    comparison value.
    """
    return N[1] + sum(Fraction(N[t] - N[t - 1], t) for t in ts)


def telescoping_count_alt(N: dict[int, int], n: int) -> Fraction:
    """sum_{i<n} N_i/(i+1) + N_n/n, the second printed form of the same count."""
    return sum((Fraction(N[i], i + 1) for i in range(1, n)), Fraction(0)) + Fraction(N[n], n)


def p1_glued_closed_form(q: int, n: int) -> tuple[int, int]:
    """(#P^1_{[q,n]}(F_q), p_a) from exact orbit counts."""
    from .curve import p1_closed_point_count

    O = {t: p1_closed_point_count(q, t) for t in range(2, n + 1)}
    return q + 1 + sum(O.values()), sum((t - 1) * o for t, o in O.items())


def p1_glued_difference_form(q: int, n: int) -> tuple[Fraction, Fraction]:
    """(q+1 + sum (q^t - q^{t-1})/t, sum (q^t - q^{t-1})(t-1)/t), possibly non-integral."""
    count = q + 1 + sum(Fraction(q**t - q ** (t - 1), t) for t in range(2, n + 1))
    genus = sum(Fraction((q**t - q ** (t - 1)) * (t - 1), t) for t in range(2, n + 1))
    return count, genus


# -- random and exhaustive profiles ------------------------------------------------


def _fiber_types(d_P: int, lo: int, hi: int, max_delta: int, min_size: int) -> list[tuple[int, ...]]:
    degs = [d for d in range(max(lo, d_P), hi + 1) if d % d_P == 0]
    out = []
    max_branches = (max_delta + d_P) // d_P
    for r in range(1, max_branches + 1):
        for br in combinations_with_replacement(degs, r):
            s = sum(br)
            if s - d_P <= max_delta and s // d_P >= min_size:
                out.append(br)
    return out


def fiber_types(max_delta: int, max_branch_degree: int, include_unibranch: bool = False) -> list[SingularFiber]:
    """Every abstract fiber with 1 <= delta <= max_delta and branch degrees <= max_branch_degree.

    With include_unibranch, fibers of geometric size 1 (delta 0) are added once per d_P.
    """
    out = []
    for d_P in range(1, max_branch_degree + 1):
        for br in _fiber_types(d_P, 1, max_branch_degree, max_delta, 1 if include_unibranch else 2):
            out.append(SingularFiber(d_P, br))
    return sorted(out, key=SingularFiber.sort_key)


def enumerate_profiles(delta: int, max_branch_degree: int, normalization: CurveModel | None = None):
    """All multisets of singular fibers with total delta exactly `delta`."""
    types = [fb for fb in fiber_types(delta, max_branch_degree)]

    def rec(start: int, remaining: int, acc: list[SingularFiber]):
        if remaining == 0:
            yield SingularCurve(normalization, tuple(acc))
            return
        for i in range(start, len(types)):
            fb = types[i]
            if fb.delta <= remaining:
                acc.append(fb)
                yield from rec(i, remaining - fb.delta, acc)
                acc.pop()

    yield from rec(0, delta, [])


def random_profile(
    seed: int,
    delta_budget: int,
    seminormal_only: bool = False,
    d_P_range: tuple[int, int] = (1, 3),
    branch_degree_range: tuple[int, int] = (1, 6),
    normalization: CurveModel | None = None,
) -> SingularCurve:
    """A seeded random abstract profile with Delta_Y <= delta_budget.

    Without seminormal_only, unibranch fibers (one closed point over P, factor 1)
    may appear alongside the singular ones.  About a third of the seeds draw
    only ordinary-double-point fibers over rational points.
    """
    if delta_budget < 0:
        raise GluingError("delta_budget must be >= 0")
    lo, hi = branch_degree_range
    d_Ps = [d for d in range(d_P_range[0], d_P_range[1] + 1) if d >= 1 and any(x % d == 0 for x in range(max(lo, d), hi + 1))]
    if not d_Ps or lo > hi:
        raise GluingError(f"no fiber fits d_P in {d_P_range} with branch degrees in {branch_degree_range}")
    rng = random.Random(seed)
    fibers: list[SingularFiber] = []
    remaining = delta_budget
    special = rng.random() < 1 / 3 and 1 in d_Ps and lo <= 2 <= hi
    for _ in range(rng.randint(0, delta_budget + 1)):
        if special:
            choices = [(1, (2,))] if remaining >= 1 else []
        else:
            d_P = rng.choice(d_Ps)
            choices = _fiber_types(d_P, lo, hi, remaining, 2 if seminormal_only else 1)
            choices = [(d_P, br) for br in choices]
        if not choices:
            break
        d_P, br = rng.choice(choices)
        fiber = SingularFiber(d_P, br)
        fibers.append(fiber)
        remaining -= fiber.delta
    return SingularCurve(normalization, tuple(fibers))


def random_concrete_curve(
    C: CurveModel,
    seed: int,
    max_degree: int = 4,
    max_fibers: int = 6,
    thickenings: int = 0,
    cap: int = DEFAULT_CAP,
) -> SingularCurve:
    """Glue random disjoint sets of closed points of C into fibers with random d_P."""
    rng = random.Random(seed)
    pool = {t: closed_points_of_degree(C, t, cap) for t in range(1, max_degree + 1)}
    for pts in pool.values():
        rng.shuffle(pts)
    Y = SingularCurve(C)
    for _ in range(rng.randint(0, max_fibers)):
        d_P = rng.choice([d for d in range(1, max_degree + 1) if any(pool[t] for t in pool if t % d == 0)] or [1])
        degs = [t for t in pool if t % d_P == 0 and pool[t]]
        if not degs:
            continue
        chosen = []
        for _ in range(rng.randint(1, 3)):
            degs = [t for t in degs if pool[t]]
            if not degs:
                break
            chosen.append(pool[rng.choice(degs)].pop())
        Y = Y.with_fiber(SingularFiber(d_P, (), tuple(chosen)))
    for _ in range(thickenings):
        degs = [t for t in pool if pool[t]]
        if not degs:
            break
        pt = pool[rng.choice(degs)].pop()
        Y = Y.with_thickening(UnibranchThickening(pt.degree, rng.randint(1, 3), pt))
    return Y
