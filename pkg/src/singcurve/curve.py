"""Smooth normalizations C over F_q: the projective line and plane curves.

Points are stored with normalized homogeneous coordinates (first nonzero
coordinate equal to 1) as tuples of field encodings, and are always listed in
lexicographic order of those tuples.  Plane curves must have coefficients in
F_p, so every field F_{q^i} sees the same equation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt
from typing import Iterator, Sequence

import numpy as np
from sympy import divisors, mobius

from .gf import DEFAULT_CAP, FieldCapError, FieldDesc, FieldElement, make_field
from .intpoly import IntPolynomial, coeffs_from_power_sums, power_sums

P1 = "p1"
PLANE = "plane"

_CHUNK = 1 << 20


class BadCurveModel(ValueError):
    """The model is not a smooth geometrically integral curve at desk scale."""


@dataclass(frozen=True)
class CurveModel:
    kind: str
    p: int
    e: int = 1
    terms: tuple[tuple[int, int, int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in (P1, PLANE):
            raise ValueError(f"unknown curve kind {self.kind!r}")
        make_field(self.p, self.e, 1)
        if self.kind == P1:
            if self.terms:
                raise ValueError("the projective line takes no equation")
            return
        merged: dict[tuple[int, int, int], int] = {}
        for c, a, b, cz in self.terms:
            if min(a, b, cz) < 0:
                raise ValueError("negative exponent")
            merged[(a, b, cz)] = (merged.get((a, b, cz), 0) + c) % self.p
        terms = tuple(sorted((c, *mono) for mono, c in merged.items() if c))
        if not terms:
            raise ValueError("zero polynomial")
        if len({sum(t[1:]) for t in terms}) != 1:
            raise ValueError("plane curve polynomial must be homogeneous")
        if sum(terms[0][1:]) < 1:
            raise ValueError("plane curve polynomial must have degree >= 1")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def projective_line(cls, p: int, e: int = 1) -> "CurveModel":
        return cls(P1, p, e)

    @classmethod
    def plane(cls, p: int, terms: Sequence[Sequence[int]], e: int = 1) -> "CurveModel":
        return cls(PLANE, p, e, tuple(tuple(t) for t in terms))

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def base(self) -> FieldDesc:
        return make_field(self.p, self.e, 1)

    @property
    def degree(self) -> int:
        return 1 if self.kind == P1 else sum(self.terms[0][1:])

    @property
    def genus(self) -> int:
        d = self.degree
        return 0 if self.kind == P1 else (d - 1) * (d - 2) // 2

    @property
    def dim(self) -> int:
        """Number of homogeneous coordinates."""
        return 2 if self.kind == P1 else 3

    def field(self, i: int, cap: int = DEFAULT_CAP) -> FieldDesc:
        return make_field(self.p, self.e, i, cap=cap)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "p": self.p, "e": self.e}
        if self.kind == PLANE:
            out["poly"] = [list(t) for t in self.terms]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CurveModel":
        return cls(obj["kind"], int(obj["p"]), int(obj.get("e", 1)), tuple(tuple(t) for t in obj.get("poly", ())))

    def __str__(self) -> str:
        if self.kind == P1:
            return f"P^1/F_{self.q}"
        mono = []
        for c, a, b, cz in self.terms:
            vars_ = "".join(v + (f"^{k}" if k > 1 else "") for v, k in zip("xyz", (a, b, cz)) if k)
            mono.append((str(c) if c != 1 else "") + vars_)
        return f"V({' + '.join(mono)})/F_{self.q}"


@dataclass(frozen=True, order=True)
class GeometricPoint:
    """A point of C over F_{q^i}, in normalized coordinates."""

    coords: tuple[int, ...]
    field: FieldDesc

    @property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coords)

    def frobenius(self, times: int = 1) -> "GeometricPoint":
        return GeometricPoint(tuple(self.field.frob(c, times) for c in self.coords), self.field)

    def degree(self) -> int:
        """Size of the Frobenius orbit."""
        for d in divisors(self.field.m):
            if self.frobenius(d) == self:
                return d
        raise AssertionError("unreachable")

    def to_json(self) -> list[list[int]]:
        return [list(self.field.decode(c)) for c in self.coords]


@dataclass(frozen=True, order=True)
class ClosedPoint:
    """A Frobenius orbit of `degree` geometric points over F_{q^degree}.

    The representative is the lexicographically smallest point of the orbit,
    so two ClosedPoints are equal exactly when their orbits are.
    """

    degree: int
    representative: GeometricPoint

    def __post_init__(self):
        if self.representative.field.m != self.degree:
            raise ValueError("representative must live in F_{q^degree}")

    @property
    def field(self) -> FieldDesc:
        return self.representative.field

    def orbit(self) -> tuple[GeometricPoint, ...]:
        pts = [self.representative]
        for _ in range(self.degree - 1):
            pts.append(pts[-1].frobenius())
        return tuple(pts)

    def to_json(self) -> dict:
        return {"degree": self.degree, "field": self.field.to_json(), "coords": self.representative.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "ClosedPoint":
        f = FieldDesc.from_json(obj["field"])
        pt = GeometricPoint(tuple(f.encode(c) for c in obj["coords"]), f)
        orbit = ClosedPoint(obj["degree"], pt).orbit()
        if len(set(orbit)) != obj["degree"]:
            raise ValueError("point does not have the stated degree")
        return cls(obj["degree"], min(orbit))


# -- vectorized evaluation -----------------------------------------------------


def _veval(f: FieldDesc, terms, X, Y, Z) -> np.ndarray:
    t = f._tables
    order = f.size - 1
    shape = np.broadcast(X, Y, Z).shape
    acc = np.zeros(shape, dtype=np.int64)
    for c, a, b, cz in terms:
        logsum = np.full(shape, int(t.log[c]), dtype=np.int64)
        zero = np.zeros(shape, dtype=bool)
        for base, k in ((X, a), (Y, b), (Z, cz)):
            if k:
                logsum = logsum + k * t.log[base]
                zero = zero | (base == 0)
        val = np.where(zero, 0, t.exp[logsum % order])
        acc = f.vadd(acc, val)
    return acc


def _partials(p: int, terms) -> list[tuple]:
    out = []
    for axis in range(3):
        d = []
        for c, *mono in terms:
            k = mono[axis]
            if k and (c * k) % p:
                mono = list(mono)
                mono[axis] -= 1
                d.append(((c * k) % p, *mono))
        out.append(tuple(d))
    return out


@lru_cache(maxsize=64)
def _points(C: CurveModel, i: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    f = C.field(i, cap)
    Q = f.size
    if C.kind == P1:
        pts = np.empty((Q + 1, 2), dtype=np.int64)
        pts[0] = (0, 1)
        pts[1:, 0] = 1
        pts[1:, 1] = np.arange(Q)
    else:
        if Q * Q > cap:
            raise FieldCapError(f"enumerating the plane over {f!r} needs {Q * Q} evaluations, over the cap {cap}")
        chunks = []
        if _veval(f, C.terms, np.int64(0), np.int64(0), np.int64(1)) == 0:
            chunks.append(np.array([[0, 0, 1]], dtype=np.int64))
        z = np.arange(Q, dtype=np.int64)
        hit = z[_veval(f, C.terms, np.int64(0), np.int64(1), z) == 0]
        chunks.append(np.stack([np.zeros_like(hit), np.ones_like(hit), hit], axis=1))
        rows = max(1, _CHUNK // Q)
        for y0 in range(0, Q, rows):
            ys = np.arange(y0, min(Q, y0 + rows), dtype=np.int64)
            Y = np.repeat(ys, Q)
            Zs = np.tile(z, len(ys))
            ok = _veval(f, C.terms, np.int64(1), Y, Zs) == 0
            chunks.append(np.stack([np.ones(ok.sum(), dtype=np.int64), Y[ok], Zs[ok]], axis=1))
        pts = np.concatenate(chunks)
    pts.setflags(write=False)
    return pts


def check_smooth(C: CurveModel, n_max: int, cap: int = DEFAULT_CAP) -> None:
    """Jacobian criterion at every point over F_{q^i}, i <= n_max.

    This is a partial check: singular points of higher degree go unseen.
    """
    if C.kind == P1:
        return
    grads = _partials(C.p, C.terms)
    for i in range(1, n_max + 1):
        f = C.field(i, cap)
        pts = _points(C, i, cap)
        if not len(pts):
            continue
        X, Y, Z = pts[:, 0], pts[:, 1], pts[:, 2]
        singular = np.ones(len(pts), dtype=bool)
        for g in grads:
            if g:
                singular &= _veval(f, g, X, Y, Z) == 0
        if singular.any():
            bad = tuple(int(c) for c in pts[np.argmax(singular)])
            raise BadCurveModel(f"{C} is singular at {bad} over {f!r}")


def contains(C: CurveModel, pt: GeometricPoint) -> bool:
    """Whether a normalized point lies on C."""
    if len(pt.coords) != C.dim or pt.field.p != C.p or pt.field.e != C.e:
        return False
    nz = [c for c in pt.coords if c]
    if not nz or nz[0] != 1:
        return False
    if C.kind == P1:
        return True
    X, Y, Z = (np.int64(c) for c in pt.coords)
    return int(_veval(pt.field, C.terms, X, Y, Z)) == 0


def enumerate_points(C: CurveModel, i: int, cap: int = DEFAULT_CAP) -> Iterator[GeometricPoint]:
    """C(F_{q^i}) in lexicographic order of normalized coordinates."""
    f = C.field(i, cap)
    for row in _points(C, i, cap).tolist():
        yield GeometricPoint(tuple(row), f)


# -- counts ----------------------------------------------------------------------


@dataclass(frozen=True)
class PointCountTable:
    q: int
    counts: dict[int, int]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    @property
    def n_max(self) -> int:
        return max(self.counts, default=0)


def weil_ok(N: int, q: int, i: int, g: int) -> bool:
    """|N - q^i - 1| <= 2 g q^{i/2}, squared to stay in integers."""
    return (N - q**i - 1) ** 2 <= 4 * g * g * q**i


def count_points(C: CurveModel, n_max: int, cap: int = DEFAULT_CAP) -> PointCountTable:
    """N_i = #C(F_{q^i}) for i = 1..n_max, with smoothness and Weil checks."""
    check_smooth(C, n_max, cap)
    counts = {}
    for i in range(1, n_max + 1):
        N = len(_points(C, i, cap))
        if not weil_ok(N, C.q, i, C.genus):
            raise BadCurveModel(f"N_{i} = {N} violates the Weil bound for genus {C.genus} over F_{C.q}")
        counts[i] = N
    return PointCountTable(C.q, counts)


def _orbit_data(C: CurveModel, t: int, cap: int):
    """Per point of C(F_{q^t}): its degree, and whether it is its orbit's minimum."""
    f = C.field(t, cap)
    pts = _points(C, t, cap)
    Q = f.size
    weights = [Q ** (C.dim - 1 - j) for j in range(C.dim)]
    wide = Q**C.dim >= 1 << 62

    def keys(a):
        if wide:
            return np.array([sum(int(c) * w for c, w in zip(row, weights)) for row in a.tolist()], dtype=object)
        return a @ np.array(weights, dtype=np.int64)

    deg = np.full(len(pts), t, dtype=np.int64)
    pending = np.ones(len(pts), dtype=bool)
    for d in divisors(t)[:-1]:
        fixed = (f.vfrob(pts, d) == pts).all(axis=1) & pending
        deg[fixed] = d
        pending &= ~fixed
    k0 = keys(pts)
    is_min = np.ones(len(pts), dtype=bool)
    img = pts
    for _ in range(t - 1):
        img = f.vfrob(img)
        is_min &= k0 <= keys(img)
    return f, pts, deg, is_min


def closed_points_of_degree(C: CurveModel, t: int, cap: int = DEFAULT_CAP) -> list[ClosedPoint]:
    """All Frobenius orbits of size exactly t, sorted by representative."""
    f, pts, deg, is_min = _orbit_data(C, t, cap)
    rows = pts[(deg == t) & is_min].tolist()
    return [ClosedPoint(t, GeometricPoint(tuple(r), f)) for r in rows]


def closed_point_count(C: CurveModel, t: int, cap: int = DEFAULT_CAP) -> int:
    _, _, deg, is_min = _orbit_data(C, t, cap)
    return int(((deg == t) & is_min).sum())


# -- zeta numerator ----------------------------------------------------------------


@dataclass(frozen=True)
class ZetaNumerator:
    """P(t) = prod (1 - w_i t) with Z_C(t) = P(t) / ((1 - t)(1 - q t))."""

    coeffs: tuple[int, ...]
    g: int
    q: int

    def __post_init__(self):
        a, g, q = self.coeffs, self.g, self.q
        if len(a) != 2 * g + 1 or a[0] != 1 or a[-1] != q**g:
            raise ValueError(f"not a zeta numerator of genus {g}: {a}")
        for i in range(g + 1):
            if a[2 * g - i] != q ** (g - i) * a[i]:
                raise ValueError(f"functional equation fails at degree {i}: {a}")

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.coeffs)

    def counts(self, n_max: int) -> dict[int, int]:
        """N_n = q^n + 1 - sum w_i^n."""
        s = power_sums(self.polynomial, n_max)
        return {n: self.q**n + 1 - s[n - 1] for n in range(1, n_max + 1)}


def zeta_numerator_from_counts(tbl: PointCountTable, g: int) -> ZetaNumerator:
    """Recover P(t) from N_1..N_g by Newton's identities and the functional equation."""
    q = tbl.q
    missing = [i for i in range(1, g + 1) if i not in tbl.counts]
    if missing:
        raise ValueError(f"need N_1..N_{g}; missing {missing}")
    s = [q**n + 1 - tbl[n] for n in range(1, g + 1)]
    low = coeffs_from_power_sums(s)
    coeffs = list(low) + [q ** (g - i) * low[i] for i in range(g - 1, -1, -1)]
    Z = ZetaNumerator(tuple(coeffs), g, q)
    back = Z.counts(tbl.n_max) if tbl.counts else {}
    bad = {i: (tbl[i], back[i]) for i in tbl.counts if back[i] != tbl[i]}
    if bad:
        raise ValueError(f"counts inconsistent with a genus-{g} numerator (given, predicted): {bad}")
    return Z


class Extremality(enum.Enum):
    MAXIMAL = "maximal"
    MINIMAL = "minimal"
    NEITHER = "neither"
    NOT_APPLICABLE = "not-applicable"


def extremality_of_C(Z: ZetaNumerator, q: int) -> Extremality:
    """Compare P(t) with (1 + sqrt(q) t)^{2g} and (1 - sqrt(q) t)^{2g}.

    Genus 0 and non-square q give NOT_APPLICABLE: there is no Weil bound to meet.
    """
    r = isqrt(q)
    if Z.g == 0 or r * r != q:
        return Extremality.NOT_APPLICABLE
    n = 2 * Z.g
    if Z.coeffs == tuple(comb(n, i) * r**i for i in range(n + 1)):
        return Extremality.MAXIMAL
    if Z.coeffs == tuple(comb(n, i) * (-r) ** i for i in range(n + 1)):
        return Extremality.MINIMAL
    return Extremality.NEITHER


def p1_closed_point_count(q: int, t: int) -> int:
    """Closed points of degree t on P^1 over F_q, by Mobius inversion."""
    if t == 1:
        return q + 1
    total = sum(mobius(t // d) * q**d for d in divisors(t))
    if total % t:
        raise AssertionError("Mobius sum must be divisible by t")
    return int(total // t)
