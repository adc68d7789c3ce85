"""Shared samplers and independent oracles for the test suite."""

import numpy as np

import tropgeo as tg


def ball_points(n, m, rng):
    """m random points of the unit ball, via its zonotope map.

    Every point of the ball is a [0,1]-combination of the n+1 unit
    directions, so uniform coefficients sweep the whole body (not
    uniformly, but with full support).
    """
    A = rng.uniform(0.0, 1.0, (m, n + 1))
    return A @ np.array(tg.units(n))


def sphere_points(n, m, rng):
    """Random points with norm exactly 1, by radially scaling ball points."""
    X = ball_points(n, m, rng)
    nrm = np.maximum(X.max(axis=1), 0.0) - np.minimum(X.min(axis=1), 0.0)
    keep = nrm > 1e-6
    return X[keep] / nrm[keep][:, None]


def dist_oracle(x, y):
    """Exhaustive max over homogeneous index pairs.

    This is the projective definition evaluated directly, an independent
    route to the same number as dist().
    """
    dx = [a - b for a, b in zip(x, y)] + [0.0]
    return max(dx[i] - dx[j] for i in range(len(dx)) for j in range(len(dx)))


def random_pl_geodesic(x, y, rng, max_splits=3):
    """A shortest path made of shuffled sub-pieces of the canonical chain.

    Each straight edge of the min chain is split into up to max_splits
    equal parts and the parts are concatenated in random order.  The
    result has the same total length, so it is again a shortest path.
    """
    seg = tg.segment(x, y)
    pieces = []
    for a, b in zip(seg.vertices, seg.vertices[1:]):
        q = int(rng.integers(1, max_splits + 1))
        step = tuple((vb - va) / q for va, vb in zip(a, b))
        pieces.extend([step] * q)
    out = [tuple(map(float, x))]
    for idx in rng.permutation(len(pieces)):
        out.append(tuple(a + b for a, b in zip(out[-1], pieces[idx])))
    return out


def independent_masks():
    """All subsets of the 6-cycle's edges with no two adjacent, as bitmasks."""
    masks = []
    for mask in range(64):
        chosen = [k for k in range(6) if mask >> k & 1]
        if all((k + 1) % 6 not in chosen for k in chosen):
            masks.append(mask)
    return masks


def batch_norm(X):
    """Vectorized norm of each row of X."""
    X = np.asarray(X, dtype=float)
    return np.maximum(X.max(axis=1), 0.0) - np.minimum(X.min(axis=1), 0.0)


def batch_dist(X, Y):
    """Vectorized dist between paired rows of X and Y."""
    return batch_norm(np.asarray(X, dtype=float) - np.asarray(Y, dtype=float))
