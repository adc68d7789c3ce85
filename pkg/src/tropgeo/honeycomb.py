"""Unit balls tiling R^n: the honeycomb lattice and point location.

The centers are the integer vectors whose coordinate sum is divisible by
n+1.  Closed unit balls on these centers cover R^n and overlap only on
boundaries, so almost every point has exactly one containing ball.  locate
finds it in O(n log n) from floors and sorted fractional parts, with a
distance certificate and a brute-force fallback near boundaries.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    DEFAULT_EPS,
    DimensionMismatch,
    DomainError,
    Point,
    TropgeoError,
    as_point,
    dist,
)
from .ball import Ball, hrep, _HEX_RING
from .geodesy import EmptyRegionError

log = logging.getLogger(__name__)

Center = tuple[int, ...]


def as_center(c) -> Center:
    """Validate an integer vector and return it as a tuple of ints."""
    out = []
    for v in c:
        if isinstance(v, int):
            out.append(v)
        elif isinstance(v, float) and v.is_integer():
            out.append(int(v))
        else:
            raise DomainError("lattice vectors need integer entries, got %r" % (v,))
    if not out:
        raise DomainError("a lattice vector needs at least one entry")
    return tuple(out)


def in_lattice(c) -> bool:
    """True when the integer vector is a tiling center (sum divisible by n+1)."""
    cc = as_center(c)
    return sum(cc) % (len(cc) + 1) == 0


@dataclass(frozen=True)
class LocateResult:
    """Outcome of point location.

    ``center`` is the fast-path center; ``all_centers`` lists every center
    whose closed ball contains the point (just one in the interior case);
    ``distance`` is dist(center, x).
    """

    center: Center
    status: str  # "interior" | "boundary"
    all_centers: tuple[Center, ...]
    distance: float


def _fast_center(x, eps: float):
    """Case analysis on floors: returns (center, snapped_any)."""
    n = len(x)
    floors = []
    snapped = False
    for v in x:
        r = round(v)
        if abs(v - r) <= eps:
            snapped = True
            floors.append(int(r))
        else:
            floors.append(int(math.floor(v)))
    k = sum(floors) % (n + 1)
    if k == 0:
        return tuple(floors), snapped
    if k == 1:
        return tuple(f + 1 for f in floors), snapped
    fracs = [v - f for v, f in zip(x, floors)]
    order = sorted(range(n), key=lambda i: (fracs[i], i))
    keep = set(order[: k - 1])
    return tuple(f if i in keep else f + 1 for i, f in enumerate(floors)), snapped


def locate_bruteforce(x, eps: float = DEFAULT_EPS) -> list[Center]:
    """All tiling centers whose closed ball contains x, by enumeration."""
    px = as_point(x)
    n = len(px)
    ranges = [
        range(math.ceil(v - 1.0 - eps), math.floor(v + 1.0 + eps) + 1) for v in px
    ]
    out = []
    for cand in itertools.product(*ranges):
        if sum(cand) % (n + 1) != 0:
            continue
        if dist(cand, px) <= 1.0 + eps:
            out.append(cand)
    return out


def locate(x, eps: float = DEFAULT_EPS) -> LocateResult:
    """Find the tiling ball containing x.

    The fast path floors the coordinates, counts how many must be rounded
    up to restore the divisibility of the sum, and rounds up the largest
    fractional parts.  The resulting distance is the certificate: below
    1 - eps the point is interior and the center unique.  Near-integer
    coordinates or a certificate at 1 or above engage the brute-force
    enumeration.
    """
    px = as_point(x)
    c, snapped = _fast_center(px, eps)
    d = dist(c, px)
    if not snapped and d < 1.0 - eps:
        return LocateResult(c, "interior", (c,), d)
    all_centers = locate_bruteforce(px, eps)
    if c not in all_centers:
        log.warning("fast-path center %r missed for %r; using nearest", c, px)
        if not all_centers:
            raise DomainError("no tiling ball contains %r" % (px,))
        c = min(all_centers, key=lambda cc: dist(cc, px))
        d = dist(c, px)
    status = "interior" if (d < 1.0 - eps and len(all_centers) == 1) else "boundary"
    return LocateResult(c, status, tuple(all_centers), d)


def lattice_basis(n: int) -> list[Center]:
    """A basis of the tiling lattice: e_i - e_{i+1} and (n+1) e_n."""
    if n < 1:
        raise DomainError("dimension must be at least 1")
    basis = []
    for i in range(n - 1):
        v = [0] * n
        v[i] = 1
        v[i + 1] = -1
        basis.append(tuple(v))
    last = [0] * n
    last[n - 1] = n + 1
    basis.append(tuple(last))
    if n == 2 and not spans_same_lattice(basis, HEX_BASIS_2D):
        raise TropgeoError("hexagonal basis desynchronized from lattice basis")
    return basis


HEX_BASIS_2D: tuple[Center, Center] = ((2, 1), (-1, 1))


def _solve_fraction(A, B):
    """Solve A X = B over the rationals; A, B are square integer matrices.
    Returns X as Fractions or None when A is singular."""
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(B[i][j]) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            return None
        M[col], M[pivot] = M[pivot], M[col]
        inv = M[col][col]
        M[col] = [v / inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def spans_same_lattice(basis_a, basis_b) -> bool:
    """True when two integer bases generate the same lattice."""
    A = [list(as_center(v)) for v in basis_a]
    B = [list(as_center(v)) for v in basis_b]
    n = len(A)
    if len(B) != n or any(len(r) != n for r in A + B):
        raise DimensionMismatch("bases must be square and equally sized")
    # columns are the basis vectors
    At = [[A[j][i] for j in range(n)] for i in range(n)]
    Bt = [[B[j][i] for j in range(n)] for i in range(n)]
    for P, Q in ((At, Bt), (Bt, At)):
        X = _solve_fraction(P, Q)
        if X is None:
            return False
        if any(v.denominator != 1 for row in X for v in row):
            return False
    return True


def neighbors(c, eps: float = DEFAULT_EPS) -> list[Center]:
    """Tiling centers whose ball shares a full facet with the ball at c.

    Searches the moves with entries in [-2, 2]; each candidate must meet the
    ball at c in a region of affine dimension n-1.  The count always comes
    out to n(n+1); anything else widens the window once and then fails."""
    cc = as_center(c)
    n = len(cc)
    if not in_lattice(cc):
        raise DomainError("center %r is not in the tiling lattice" % (cc,))
    expected = n * (n + 1)
    for halfwidth in (2, 3):
        found = _facet_neighbors(cc, halfwidth, eps)
        if len(found) == expected:
            return found
        log.warning(
            "neighbor search at window %d found %d of %d", halfwidth, len(found), expected
        )
    raise TropgeoError(
        "neighbor count %d does not match n(n+1) = %d for %r"
        % (len(found), expected, cc)
    )


def _facet_neighbors(cc: Center, halfwidth: int, eps: float) -> list[Center]:
    n = len(cc)
    own = hrep(Ball(cc))
    found = []
    for delta in itertools.product(range(-halfwidth, halfwidth + 1), repeat=n):
        if not any(delta):
            continue
        if sum(delta) % (n + 1) != 0:
            continue
        other = tuple(a + b for a, b in zip(cc, delta))
        try:
            shared = own.intersect(hrep(Ball(other)), eps=eps)
        except EmptyRegionError:
            continue
        if shared.affine_dim(eps) == n - 1:
            found.append(other)
    found.sort()
    return found


@dataclass(frozen=True)
class TilingReport:
    """Summary of a randomized covering/disjointness check."""

    n: int
    samples: int
    box_halfwidth: float
    seed: int
    interior: int
    boundary: int
    mismatches: int


def verify_tiling(
    n: int,
    box_halfwidth: float = 10.0,
    samples: int = 100_000,
    seed: int = 0,
    eps: float = DEFAULT_EPS,
    shard_size: int = 65_536,
) -> TilingReport:
    """Sample uniform points and check the fast locator against enumeration.

    A sample counts as a mismatch when an interior point has more or fewer
    than one containing center, or when a boundary point's fast-path center
    is not among its containing centers.  Sampling is sharded; shard s uses
    the substream seeded by (seed, s), so reports are reproducible for a
    given (seed, samples, shard_size).
    """
    if n < 1:
        raise DomainError("dimension must be at least 1")
    if samples < 0:
        raise DomainError("samples must be nonnegative")
    interior = boundary = mismatches = 0
    done = 0
    shard = 0
    while done < samples:
        m = min(shard_size, samples - done)
        rng = np.random.default_rng([seed, shard])
        X = rng.uniform(-box_halfwidth, box_halfwidth, size=(m, n))
        i_cnt, b_cnt, mm = _verify_block(X, eps)
        interior += i_cnt
        boundary += b_cnt
        mismatches += mm
        done += m
        shard += 1
    return TilingReport(
        n=n,
        samples=samples,
        box_halfwidth=box_halfwidth,
        seed=seed,
        interior=interior,
        boundary=boundary,
        mismatches=mismatches,
    )


def _verify_block(X: np.ndarray, eps: float) -> tuple[int, int, int]:
    m, n = X.shape
    R = np.round(X)
    snapped = np.abs(X - R) <= eps
    Xs = np.where(snapped, R, X)
    F = np.floor(Xs)
    k = F.sum(axis=1).astype(np.int64) % (n + 1)
    frac = X - F
    order = np.argsort(frac, axis=1, kind="stable")
    rank = np.argsort(order, axis=1)
    inc = (rank >= (k[:, None] - 1)) & (k[:, None] != 0)
    C = F + inc
    diffs = X - C
    d = np.maximum(diffs.max(axis=1), 0.0) - np.minimum(diffs.min(axis=1), 0.0)

    # containing-center counts via the 0/1 offsets of the floors; complete
    # whenever no coordinate sits within eps of an integer
    count = np.zeros(m, dtype=np.int64)
    for bits in itertools.product((0.0, 1.0), repeat=n):
        cand = F + np.array(bits)
        ok = cand.sum(axis=1).astype(np.int64) % (n + 1) == 0
        cd = X - cand
        cdist = np.maximum(cd.max(axis=1), 0.0) - np.minimum(cd.min(axis=1), 0.0)
        ok &= cdist <= 1.0 + eps
        count += ok

    clean = ~snapped.any(axis=1)
    is_interior = clean & (d < 1.0 - eps)
    is_boundary = clean & ~is_interior
    interior = int(is_interior.sum())
    boundary = int(is_boundary.sum())
    bad_interior = is_interior & (count != 1)
    near_one = np.abs(d - 1.0) <= eps
    bad_boundary = is_boundary & ((d > 1.0 + eps) | ((count < 2) & ~near_one))
    mismatches = int(bad_interior.sum()) + int(bad_boundary.sum())

    for idx in np.nonzero(~clean)[0]:
        res = locate(tuple(X[idx]), eps)
        if res.status == "interior":
            interior += 1
            if len(res.all_centers) != 1:
                mismatches += 1
        else:
            boundary += 1
            if res.distance > 1.0 + eps or (
                len(res.all_centers) < 2 and abs(res.distance - 1.0) > eps
            ):
                mismatches += 1
    return interior, boundary, mismatches


def hexagon_rings(box_halfwidth: float) -> list[tuple[Center, tuple[Point, ...]]]:
    """Hexagon outlines of the planar tiling with centers inside the box."""
    w = float(box_halfwidth)
    if w < 0:
        raise DomainError("box halfwidth must be nonnegative")
    hi = math.floor(w)
    out = []
    for cx in range(-hi, hi + 1):
        for cy in range(-hi, hi + 1):
            if (cx + cy) % 3 != 0:
                continue
            ring = tuple((cx + vx, cy + vy) for vx, vy in _HEX_RING)
            out.append(((cx, cy), ring))
    return out
