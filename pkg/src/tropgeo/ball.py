"""The min-plus unit ball, its faces, and the intrinsic sphere geometry.

The unit ball centered at the origin of R^n is the polytope
``|x_i| <= 1, |x_i - x_j| <= 1``.  It has n(n+1) facets and 2^(n+1) - 2
vertices (the nonzero 0/1 and 0/-1 vectors), and it is a zonotope: every
member splits as a nonnegative combination of the n+1 unit directions
e_1 ... e_n and -(1,...,1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    DEFAULT_EPS,
    DimensionMismatch,
    DomainError,
    Point,
    as_point,
    dist,
    norm,
)
from .geodesy import GeodesicRegion


@dataclass(frozen=True)
class Ball:
    """A min-plus ball given by center and radius."""

    center: Point
    radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0:
            raise DomainError("radius must be positive")


def unit_ball(n: int) -> Ball:
    if n < 1:
        raise DomainError("dimension must be at least 1")
    return Ball((0.0,) * n, 1.0)


def units(n: int) -> tuple[Point, ...]:
    """The n+1 unit directions: e_1 ... e_n and the all -1 vector."""
    if n < 1:
        raise DomainError("dimension must be at least 1")
    basis = [tuple(1.0 if j == i else 0.0 for j in range(n)) for i in range(n)]
    basis.append((-1.0,) * n)
    return tuple(basis)


def neg_units(n: int) -> tuple[Point, ...]:
    """Negated unit directions: -e_1 ... -e_n and the all 1 vector."""
    return tuple(tuple(-v for v in u) for u in units(n))


def contains(ball: Ball, x, eps: float = DEFAULT_EPS) -> bool:
    return dist(ball.center, x) <= ball.radius + eps


def hrep(ball: Ball, eps: float = DEFAULT_EPS) -> GeodesicRegion:
    """Ball as a canonical bound system (already tight as written)."""
    c = ball.center
    r = ball.radius
    n = len(c)
    lo = tuple(v - r for v in c)
    up = tuple(v + r for v in c)
    diff = [
        [(c[i] - c[j]) - r if i != j else 0.0 for j in range(n)] for i in range(n)
    ]
    return GeodesicRegion(lo, up, diff, eps=eps)


def iter_vertices(n: int):
    """Vertices of the unit ball at the origin, 0/1 vectors first."""
    if n < 1:
        raise DomainError("dimension must be at least 1")
    for high in (1.0, -1.0):
        for combo in itertools.product((0.0, high), repeat=n):
            if any(combo):
                yield combo


def vertices(n: int) -> list[Point]:
    return list(iter_vertices(n))


@dataclass(frozen=True)
class FacetId:
    """One facet of the unit ball: upper(i), lower(i), or diff(i, j).

    Indices are 1-based.  upper(i) supports x_i = 1, lower(i) supports
    x_i = -1, diff(i, j) supports x_i - x_j = 1.
    """

    kind: str
    i: int
    j: int | None = None

    def __post_init__(self):
        if self.kind not in ("upper", "lower", "diff"):
            raise DomainError("facet kind must be upper, lower or diff")
        if self.i < 1:
            raise DomainError("facet indices are 1-based")
        if self.kind == "diff":
            if self.j is None or self.j < 1 or self.j == self.i:
                raise DomainError("diff facet needs two distinct indices")
        elif self.j is not None:
            raise DomainError("%s facet takes a single index" % self.kind)

    def __str__(self):
        if self.kind == "diff":
            return "diff(%d,%d)" % (self.i, self.j)
        return "%s(%d)" % (self.kind, self.i)


def facets(n: int) -> list[FacetId]:
    """All n(n+1) facets, uppers then lowers then diff pairs."""
    if n < 1:
        raise DomainError("dimension must be at least 1")
    out = [FacetId("upper", i) for i in range(1, n + 1)]
    out += [FacetId("lower", i) for i in range(1, n + 1)]
    out += [
        FacetId("diff", i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]
    return out


def opposite(f: FacetId) -> FacetId:
    """The antipodal facet: negating a facet's points lands on this one."""
    if f.kind == "upper":
        return FacetId("lower", f.i)
    if f.kind == "lower":
        return FacetId("upper", f.i)
    return FacetId("diff", f.j, f.i)


def facet_contains(f: FacetId, x, eps: float = DEFAULT_EPS) -> bool:
    """Membership of x in one closed facet of the unit sphere."""
    px = as_point(x)
    n = len(px)
    if f.i > n or (f.j is not None and f.j > n):
        raise DimensionMismatch("facet index exceeds point dimension")
    if f.kind == "upper":
        xi = px[f.i - 1]
        if abs(xi - 1.0) > eps:
            return False
        return all(-eps <= v <= 1.0 + eps for v in px)
    if f.kind == "lower":
        xi = px[f.i - 1]
        if abs(xi + 1.0) > eps:
            return False
        return all(-1.0 - eps <= v <= eps for v in px)
    xi = px[f.i - 1]
    xj = px[f.j - 1]
    if abs(xi - xj - 1.0) > eps:
        return False
    if not (-eps <= xi <= 1.0 + eps):
        return False
    return all(xj - eps <= v <= xi + eps for v in px)


def facet_of(x, eps: float = DEFAULT_EPS) -> list[FacetId]:
    """All facets through a point of the unit sphere, in facets() order."""
    px = as_point(x)
    if abs(norm(px) - 1.0) > eps:
        raise DomainError("point is not on the unit sphere")
    return [f for f in facets(len(px)) if facet_contains(f, px, eps)]


def is_diametral_pair(ball: Ball, p, q, eps: float = DEFAULT_EPS) -> bool:
    """True when two sphere points realize the diameter 2R."""
    dp = dist(ball.center, p)
    dq = dist(ball.center, q)
    if abs(dp - ball.radius) > eps or abs(dq - ball.radius) > eps:
        raise DomainError("both points must lie on the sphere")
    return dist(p, q) >= 2.0 * ball.radius - eps


def minkowski_coeffs(x, eps: float = DEFAULT_EPS) -> tuple[float, ...]:
    """Coefficients a_1 ... a_{n+1} in [0,1] with x = sum a_k * units(n)[k].

    The last coefficient weights the all -1 direction.  Fails for points
    outside the unit ball at the origin.
    """
    px = as_point(x)
    if norm(px) > 1.0 + eps:
        raise DomainError("point lies outside the unit ball")
    m = min(0.0, min(px))
    return tuple(v - m for v in px) + (0.0 - m,)


def zonotope_point(coeffs) -> Point:
    """Recombine minkowski_coeffs back into the point they came from."""
    a = as_point(coeffs)
    if len(a) < 2:
        raise DomainError("need at least two coefficients")
    last = a[-1]
    return tuple(v - last for v in a[:-1])


def orthant_of(x, eps: float = DEFAULT_EPS) -> tuple[int, ...]:
    """1-based indices of the closed orthant pieces containing x.

    Index k <= n means coordinate k attains the minimum of (x, 0); index
    n+1 means 0 does.  Interior points of the ball pieces give a single
    index; ties list every minimizer.
    """
    px = as_point(x)
    h = px + (0.0,)
    m = min(h)
    return tuple(k + 1 for k, v in enumerate(h) if v <= m + eps)


def generator_coeffs(x, eps: float = DEFAULT_EPS) -> tuple[float, ...]:
    """Weights l_1 ... l_{n+1} expressing x as a min-plus combination of
    neg_units(n): x_k = min_i (l_i + neg_units[i][k])."""
    px = as_point(x)
    if norm(px) > 1.0 + eps:
        raise DomainError("point lies outside the unit ball")
    return tuple(1.0 + v for v in px) + (0.0,)


def eval_trop_combination(coeffs, generators, mode: str = "min") -> Point:
    """Evaluate a min-plus combination: coordinatewise min of coeff + generator."""
    if mode != "min":
        raise DomainError("only min mode combinations are supported")
    a = [float(v) for v in coeffs]
    gens = [as_point(g) for g in generators]
    if len(a) != len(gens):
        raise DimensionMismatch("one coefficient per generator required")
    if not gens:
        raise DomainError("need at least one generator")
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch("generators have mixed dimensions")
    return tuple(min(a[i] + g[k] for i, g in enumerate(gens)) for k in range(n))


def pole_distances(x, eps: float = DEFAULT_EPS) -> tuple[float, float]:
    """Intrinsic sphere distances from x to the poles (1,...,1) and
    (-1,...,-1).  The two always sum to 3."""
    px = as_point(x)
    if abs(norm(px) - 1.0) > eps:
        raise DomainError("point is not on the unit sphere")
    mx = max(px)
    mn = min(px)
    if mx <= eps:
        return 2.0 - mx, 1.0 + mx
    return 1.0 - mn, 2.0 + mn


_HEX_RING = ((1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (-1.0, 0.0), (-1.0, -1.0), (0.0, -1.0))


def sphere_position_2d(x, center=(0.0, 0.0), eps: float = DEFAULT_EPS) -> float:
    """Arc-length position in [0, 6) along the planar unit sphere.

    The hexagon boundary is traversed from (1,0) through (1,1), (0,1),
    (-1,0), (-1,-1), (0,-1); every edge has min-plus length 1.
    """
    px = as_point(x)
    pc = as_point(center)
    if len(px) != 2 or len(pc) != 2:
        raise DimensionMismatch("sphere walk is planar only")
    q0 = px[0] - pc[0]
    q1 = px[1] - pc[1]
    if abs(norm((q0, q1)) - 1.0) > eps:
        raise DomainError("point is not on the unit sphere")

    def clamp(v):
        return min(1.0, max(0.0, v))

    if abs(q0 - 1.0) <= eps and -eps <= q1 <= 1.0 + eps:
        return 0.0 + clamp(q1)
    if abs(q1 - 1.0) <= eps and -eps <= q0 <= 1.0 + eps:
        return 1.0 + clamp(1.0 - q0)
    if abs(q1 - q0 - 1.0) <= eps and -1.0 - eps <= q0 <= eps:
        return 2.0 + clamp(-q0)
    if abs(q0 + 1.0) <= eps and -1.0 - eps <= q1 <= eps:
        return 3.0 + clamp(-q1)
    if abs(q1 + 1.0) <= eps and -1.0 - eps <= q0 <= eps:
        return 4.0 + clamp(q0 + 1.0)
    if abs(q0 - q1 - 1.0) <= eps and -eps <= q0 <= 1.0 + eps:
        return 5.0 + clamp(q0)
    raise DomainError("point is not on the unit sphere")


def intrinsic_distance_2d(center, x, y, eps: float = DEFAULT_EPS) -> float:
    """Length of the shorter boundary arc between two planar sphere points."""
    sx = sphere_position_2d(x, center, eps)
    sy = sphere_position_2d(y, center, eps)
    gap = abs(sx - sy)
    return min(gap, 6.0 - gap)


def angle_2d(p, v1, v2, eps: float = DEFAULT_EPS) -> float:
    """Angle at p between the rays along v1 and v2: the intrinsic distance
    between the points where the rays pierce the unit sphere at p.

    Values lie in [0, 3]; the two coordinate axes and the diagonal
    direction -(1,1) are pairwise at angle 2.  For the angle between full
    lines take the min of this over v2 and -v2.
    """
    pp = as_point(p)
    if len(pp) != 2:
        raise DimensionMismatch("angles are planar only")
    out = []
    for v in (v1, v2):
        pv = as_point(v)
        if len(pv) != 2:
            raise DimensionMismatch("directions must be planar")
        nv = norm(pv)
        if nv <= eps:
            raise DomainError("direction vector must be nonzero")
        out.append((pp[0] + pv[0] / nv, pp[1] + pv[1] / nv))
    return intrinsic_distance_2d(pp, out[0], out[1], eps)
