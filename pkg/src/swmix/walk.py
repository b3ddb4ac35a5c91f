"""Lazy random walk on a sampled graph: kernel, mixing time, spectral gap.

The walk stays put with probability 1/2 and otherwise moves to a uniform
neighbour, so the transition kernel is P = I/2 + D^(-1) A / 2.  The chain is
irreducible (the torus edges keep the graph connected), aperiodic by
laziness, and reversible with stationary distribution pi_v = deg(v) / 2|E|.

Mixing time is the first t at which the total-variation distance to pi,
maximized over the chosen start vertices, drops to epsilon (1/4 by default).
For lazy chains that distance is nonincreasing in t, so the search doubles t
until the target is bracketed and then bisects, restarting from cached
distributions instead of from scratch.  Distributions are evolved in 64-bit
floats with one renormalization every 64 steps to pin down mass drift.

With ``starts="all"`` the estimate is exact.  Above EXACT_STARTS_MAX_VERTICES
vertices the ``"auto"`` policy switches to a documented heuristic start set,
the far vertex of a double BFS sweep plus 32 seeded uniform vertices, and the
result is labeled as a lower estimate (``exact=False``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from .bfs import double_sweep
from .errors import ConvergenceError
from .generate import SmallWorldGraph

__all__ = [
    "EXACT_STARTS_MAX_VERTICES",
    "stationary",
    "lazy_kernel",
    "step_distribution",
    "tv_distance",
    "distance_to_stationarity",
    "MixingEstimate",
    "mixing_time",
    "heuristic_start_vertices",
    "spectral_gap",
    "second_eigenpair",
    "relaxation_bounds",
    "sample_trajectory",
]

# Largest N for which the default policy evolves all N point masses exactly.
EXACT_STARTS_MAX_VERTICES = 400

# Steps between in-place renormalizations of evolved distributions.
_RENORM_EVERY = 64


def stationary(graph: SmallWorldGraph) -> np.ndarray:
    """Stationary distribution pi_v = deg(v) / (2 |E|)."""
    return graph.degrees / (2.0 * graph.edge_count)


def lazy_kernel(graph: SmallWorldGraph) -> scipy.sparse.csr_matrix:
    """Row-stochastic lazy transition matrix P = I/2 + D^(-1) A / 2."""
    n = graph.num_vertices
    dinv = 1.0 / graph.degrees
    walk = scipy.sparse.diags(dinv) @ graph.adjacency
    return (0.5 * scipy.sparse.eye(n, format="csr") + 0.5 * walk).tocsr()


def _kernel_transpose(graph: SmallWorldGraph) -> scipy.sparse.csr_matrix:
    # Column-stochastic form acting on column distributions: P^T y.
    n = graph.num_vertices
    dinv = 1.0 / graph.degrees
    walk_t = graph.adjacency @ scipy.sparse.diags(dinv)
    return (0.5 * scipy.sparse.eye(n, format="csr") + 0.5 * walk_t).tocsr()


def step_distribution(graph: SmallWorldGraph, mu) -> np.ndarray:
    """One lazy-walk step applied to a distribution over vertices.

    Raises:
        ValueError: if mu does not have shape (N,) or has negative entries.
    """
    mu = np.asarray(mu, dtype=np.float64)
    if mu.shape != (graph.num_vertices,):
        raise ValueError(f"distribution must have shape ({graph.num_vertices},), got {mu.shape}")
    if np.any(mu < 0):
        raise ValueError("distribution entries must be nonnegative")
    return 0.5 * mu + 0.5 * (graph.adjacency @ (mu / graph.degrees))


def tv_distance(mu, nu) -> float:
    """Total-variation distance, half the L1 distance.

    Raises:
        ValueError: if the two vectors differ in shape.
    """
    mu = np.asarray(mu, dtype=np.float64)
    nu = np.asarray(nu, dtype=np.float64)
    if mu.shape != nu.shape:
        raise ValueError(f"shape mismatch: {mu.shape} vs {nu.shape}")
    return 0.5 * float(np.abs(mu - nu).sum())


def _evolve(kernel_t, Y: np.ndarray, t_from: int, t_to: int) -> np.ndarray:
    # Renormalization points are tied to absolute time, so evolving in pieces
    # from cached snapshots reproduces the straight-line run bit for bit.
    for t in range(t_from + 1, t_to + 1):
        Y = kernel_t @ Y
        if t % _RENORM_EVERY == 0:
            Y = Y / Y.sum(axis=0, keepdims=True)
    return Y


def distance_to_stationarity(graph: SmallWorldGraph, v, t) -> float:
    """TV distance between the walk started at vertex v after t steps and pi."""
    if not 0 <= v < graph.num_vertices:
        raise ValueError(f"start vertex {v} out of range")
    if t < 0:
        raise ValueError("step count must be nonnegative")
    y = np.zeros((graph.num_vertices, 1))
    y[v, 0] = 1.0
    y = _evolve(_kernel_transpose(graph), y, 0, int(t))
    return tv_distance(y[:, 0], stationary(graph))


@dataclass(frozen=True)
class MixingEstimate:
    """Result of a mixing-time search.

    ``t_mix`` is the first step count at which the worst TV distance over the
    start set is <= epsilon.  ``exact`` is True when every vertex was a start,
    in which case t_mix is the true mixing time; otherwise it is a lower
    estimate.  ``curve`` holds the (t, worst TV) pairs actually evaluated.
    """

    t_mix: int
    epsilon: float
    start_vertices: np.ndarray
    exact: bool
    curve: tuple


def heuristic_start_vertices(graph: SmallWorldGraph, num_random=32) -> np.ndarray:
    """Start set for large graphs: double-sweep far vertex + seeded uniforms.

    The random vertices come from the instance seed under spawn_key (0, 1),
    so the set is a pure function of the graph.
    """
    far, _, _ = double_sweep(graph)
    ss = np.random.SeedSequence(entropy=graph.params.seed, spawn_key=(0, 1))
    rng = np.random.Generator(np.random.Philox(ss))
    rnd = rng.integers(0, graph.num_vertices, size=num_random)
    return np.unique(np.concatenate([[far], rnd]))


def _resolve_starts(graph: SmallWorldGraph, starts):
    if isinstance(starts, str):
        if starts == "auto":
            starts = "all" if graph.num_vertices <= EXACT_STARTS_MAX_VERTICES else "heuristic"
        if starts == "all":
            return np.arange(graph.num_vertices), True
        if starts == "heuristic":
            return heuristic_start_vertices(graph), False
        raise ValueError(f"starts must be 'all', 'heuristic', 'auto', or vertex indices, got {starts!r}")
    arr = np.unique(np.asarray(starts, dtype=np.int64))
    if arr.size == 0 or arr.min() < 0 or arr.max() >= graph.num_vertices:
        raise ValueError("start vertices out of range")
    return arr, arr.size == graph.num_vertices


def mixing_time(graph: SmallWorldGraph, starts="auto", epsilon=0.25) -> MixingEstimate:
    """Smallest t with max-over-starts TV distance to stationarity <= epsilon.

    Args:
        graph: the sampled graph.
        starts: "all" (exact), "heuristic", "auto" (exact up to
            EXACT_STARTS_MAX_VERTICES vertices), or explicit vertex indices.
        epsilon: TV threshold in (0, 1]; 1/4 by default.

    Returns:
        MixingEstimate; its t_mix satisfies the threshold and t_mix - 1
        does not, as TV from stationarity is nonincreasing for lazy walks.
    """
    if not 0 < epsilon <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon!r}")
    start_vertices, exact = _resolve_starts(graph, starts)
    pi = stationary(graph)[:, None]
    kernel_t = _kernel_transpose(graph)

    Y = np.zeros((graph.num_vertices, start_vertices.size))
    Y[start_vertices, np.arange(start_vertices.size)] = 1.0

    def worst_tv(M):
        return 0.5 * float(np.abs(M - pi).sum(axis=0).max())

    curve = [(0, worst_tv(Y))]
    if curve[0][1] <= epsilon:
        return MixingEstimate(0, epsilon, start_vertices, exact, tuple(curve))

    snapshots = {0: Y}
    t, probe = 0, 1
    while True:
        Y = _evolve(kernel_t, Y, t, probe)
        t = probe
        snapshots[t] = Y
        tv = worst_tv(Y)
        curve.append((t, tv))
        if tv <= epsilon:
            hi = t
            break
        probe *= 2

    lo = hi // 2  # last probe that failed (or 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        base = max(s for s in snapshots if s <= mid)
        Ymid = _evolve(kernel_t, snapshots[base], base, mid)
        snapshots[mid] = Ymid
        tv = worst_tv(Ymid)
        curve.append((mid, tv))
        if tv <= epsilon:
            hi = mid
        else:
            lo = mid
    curve.sort()
    return MixingEstimate(int(hi), epsilon, start_vertices, exact, tuple(curve))


def second_eigenpair(graph: SmallWorldGraph, tol=1e-6, max_iter=30_000):
    """Second-largest eigenvalue of the lazy kernel and its eigenvector.

    Works on the symmetrized kernel S = D^(1/2) P D^(-1/2), whose known top
    eigenvector sqrt(pi) is deflated exactly at every step of a power
    iteration.  Laziness puts the whole spectrum in [0, 1], so the dominant
    remaining eigenvalue is lambda_2 itself.  Returns (lambda_2, x) with x
    the unit eigenvector of S; the corresponding right eigenvector of P is
    D^(-1/2) x.

    When the power iteration hits its cap without settling (nearly
    degenerate lambda_2 ~ lambda_3, e.g. at large r where the two torus
    axis modes split only by the few long-range edges), a Lanczos solve on
    the deflated operator finishes the job from the last iterate.

    Raises:
        ConvergenceError: if the Lanczos fallback also fails to converge;
            the error carries the last iterate.
    """
    deg = graph.degrees.astype(np.float64)
    u1 = np.sqrt(deg)
    u1 /= np.linalg.norm(u1)
    dinv_sqrt = 1.0 / np.sqrt(deg)
    adj = graph.adjacency

    def apply_s(x):
        return 0.5 * x + 0.5 * dinv_sqrt * (adj @ (dinv_sqrt * x))

    ss = np.random.SeedSequence(entropy=graph.params.seed, spawn_key=(0, 2))
    rng = np.random.Generator(np.random.Philox(ss))
    v = rng.standard_normal(graph.num_vertices)
    v -= (u1 @ v) * u1
    norm = np.linalg.norm(v)
    if norm == 0.0:
        return 0.0, v  # single-vertex graph; nothing besides the top eigenvector
    v /= norm

    check_every = 16
    lam = lam_prev = -np.inf
    settled = 0
    for it in range(1, max_iter + 1):
        w = apply_s(v)
        w -= (u1 @ w) * u1
        lam = float(v @ w)
        n2 = np.linalg.norm(w)
        if n2 == 0.0:
            return 0.0, v
        v = w / n2
        if it % check_every == 0:
            gap_now = 1.0 - lam
            gap_prev = 1.0 - lam_prev
            if math.isfinite(gap_prev) and abs(gap_now - gap_prev) <= 0.01 * tol * abs(gap_now):
                settled += 1
                if settled >= 2:
                    return lam, v
            else:
                settled = 0
            lam_prev = lam
    num = graph.num_vertices
    op = scipy.sparse.linalg.LinearOperator(
        (num, num), matvec=lambda x: apply_s(x) - (u1 @ x) * u1, dtype=np.float64
    )
    try:
        vals, vecs = scipy.sparse.linalg.eigsh(op, k=1, which="LA", v0=v)
    except scipy.sparse.linalg.ArpackNoConvergence:
        raise ConvergenceError(
            f"power iteration did not settle within {max_iter} iterations",
            last_value=1.0 - lam,
            last_iterate=v,
            iterations=max_iter,
        ) from None
    x = vecs[:, 0]
    x -= (u1 @ x) * u1
    x /= np.linalg.norm(x)
    return float(vals[0]), x


def spectral_gap(graph: SmallWorldGraph, tol=1e-6, max_iter=30_000) -> float:
    """Spectral gap 1 - lambda_2 of the lazy kernel; always in (0, 1]."""
    lam, _ = second_eigenpair(graph, tol=tol, max_iter=max_iter)
    return 1.0 - lam


def relaxation_bounds(gap, pi_min, epsilon=0.25):
    """Mixing-time sandwich from the relaxation time 1/gap.

    Returns (lower, upper) with
        lower = (1/gap - 1) * ln(1 / (2 epsilon))
        upper = (1/gap) * ln(1 / (epsilon * pi_min)),
    valid for reversible lazy chains.
    """
    if not 0 < gap <= 1:
        raise ValueError(f"gap must lie in (0, 1], got {gap!r}")
    if not 0 < pi_min <= 1:
        raise ValueError(f"pi_min must lie in (0, 1], got {pi_min!r}")
    t_rel = 1.0 / gap
    return (t_rel - 1.0) * math.log(1.0 / (2.0 * epsilon)), t_rel * math.log(1.0 / (epsilon * pi_min))


def sample_trajectory(graph: SmallWorldGraph, start, steps, rng) -> np.ndarray:
    """Simulate one lazy-walk trajectory; returns steps + 1 vertex indices.

    Args:
        rng: a numpy Generator; the caller owns stream derivation.
    """
    if not 0 <= start < graph.num_vertices:
        raise ValueError(f"start vertex {start} out of range")
    if steps < 0:
        raise ValueError("step count must be nonnegative")
    path = np.empty(steps + 1, dtype=np.int64)
    path[0] = start
    cur = int(start)
    lazy = rng.random(steps)
    for i in range(steps):
        if lazy[i] >= 0.5:
            nbrs = graph.neighbours(cur)
            cur = int(nbrs[rng.integers(0, nbrs.size)])
        path[i + 1] = cur
    return path
