"""Cuts, conductance, expansion certificates, and exact small-scale minima.

Vertex sets are boolean masks over canonical indices.  For a set S in graph
G = (V, E) the edge boundary is the set of edges with exactly one endpoint
in S, the vertex boundary is the set of outside vertices adjacent to S, and
the conductance is

    phi(S) = |boundary(S)| / ( d(S) * d(V \\ S) / (2 |E|) ),

where d(X) sums degrees over X.  phi is symmetric under complementation and
positive for every proper nonempty S of a connected graph.

The expansion certificate checks, for given epsilon and c, that every
subset S' of S with |S'| >= (1 - epsilon)|S| keeps |boundary(S) cap
boundary(S')| >= c |S'|.  Sorting the per-vertex outside-edge counts makes
the worst S' of each size a prefix, so the check is exact and runs in
O(|S| log |S|) despite quantifying over exponentially many subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bfs
from .errors import CapacityError
from .generate import SmallWorldGraph
from .torus import BoxPartition
from .walk import second_eigenpair

__all__ = [
    "CutReport",
    "cut_report",
    "edge_boundary",
    "vertex_boundary",
    "degree_sum",
    "conductance",
    "ExpansionVerdict",
    "is_expanding",
    "min_conductance_bruteforce",
    "sweep_cut",
    "ball_set",
    "count_connected_box_sets",
    "diameter",
]

# Exhaustive minima and the box-set counter refuse inputs above these sizes.
BRUTE_ALL_SUBSETS_MAX_VERTICES = 25
BRUTE_CONNECTED_MAX_VERTICES = 400
BOX_GRAPH_MAX_BOXES = 64
BOX_SET_MAX_SIZE = 4
DIAMETER_MAX_VERTICES = 100_000


def _as_mask(graph: SmallWorldGraph, S) -> np.ndarray:
    S = np.asarray(S)
    if S.dtype != np.bool_ or S.shape != (graph.num_vertices,):
        raise ValueError(f"vertex set must be a bool mask of shape ({graph.num_vertices},)")
    return S


def _cut_entries(graph: SmallWorldGraph, S: np.ndarray):
    """Directed adjacency entries (head in S, tail outside S)."""
    inside = np.flatnonzero(S)
    starts = graph.indptr[inside]
    counts = graph.indptr[inside + 1] - starts
    heads = np.repeat(inside, counts)
    tails = graph.indices[bfs._concat_ranges(starts, counts)]
    out = ~S[tails]
    return heads[out], tails[out]


def edge_boundary(graph: SmallWorldGraph, S) -> np.ndarray:
    """Edges leaving S, as (k, 2) pairs (u, v) with u < v, lexsorted."""
    S = _as_mask(graph, S)
    heads, tails = _cut_entries(graph, S)
    pairs = np.column_stack([heads, tails])
    pairs.sort(axis=1)
    order = np.lexsort((pairs[:, 1], pairs[:, 0]))
    return pairs[order]


def vertex_boundary(graph: SmallWorldGraph, S) -> np.ndarray:
    """Bool mask of vertices outside S adjacent to at least one vertex of S."""
    S = _as_mask(graph, S)
    _, tails = _cut_entries(graph, S)
    mask = np.zeros(graph.num_vertices, dtype=bool)
    mask[tails] = True
    return mask


def degree_sum(graph: SmallWorldGraph, S) -> int:
    """Sum of vertex degrees over S."""
    S = _as_mask(graph, S)
    return int(graph.degrees[S].sum())


def conductance(graph: SmallWorldGraph, S) -> float:
    """Conductance phi(S); raises ValueError for empty or full S."""
    S = _as_mask(graph, S)
    size = int(S.sum())
    if size == 0 or size == graph.num_vertices:
        raise ValueError("conductance needs a proper nonempty vertex set")
    _, tails = _cut_entries(graph, S)
    return _conductance_from(graph, int(tails.size), int(graph.degrees[S].sum()))


def _conductance_from(graph: SmallWorldGraph, cut: int, dsum: int) -> float:
    total = 2 * graph.edge_count
    return cut * total / (dsum * (total - dsum))


@dataclass(frozen=True)
class CutReport:
    """Summary of one cut: sizes, boundaries, degree mass, conductance."""

    set_size: int
    edge_boundary: int
    vertex_boundary: int
    degree_sum: int
    conductance: float
    alpha: float  # volume fraction |S| / N


def cut_report(graph: SmallWorldGraph, S) -> CutReport:
    """CutReport for the given proper nonempty vertex set."""
    S = _as_mask(graph, S)
    size = int(S.sum())
    if size == 0 or size == graph.num_vertices:
        raise ValueError("cut report needs a proper nonempty vertex set")
    _, tails = _cut_entries(graph, S)
    cut = int(tails.size)
    vb = int(np.unique(tails).size)
    dsum = int(graph.degrees[S].sum())
    total = 2 * graph.edge_count
    return CutReport(
        set_size=size,
        edge_boundary=cut,
        vertex_boundary=vb,
        degree_sum=dsum,
        conductance=cut * total / (dsum * (total - dsum)),
        alpha=size / graph.num_vertices,
    )


@dataclass(frozen=True)
class ExpansionVerdict:
    """Outcome of the (epsilon, c) expansion check on one set."""

    holds: bool
    epsilon: float
    c: float
    set_size: int
    min_subset_size: int
    worst_subset_size: int
    worst_boundary: int
    required: float


def is_expanding(graph: SmallWorldGraph, S, epsilon, c) -> ExpansionVerdict:
    """Exact check that S is (epsilon, c)-expanding in G.

    Every S' subseteq S with |S'| >= (1 - epsilon)|S| must satisfy
    |boundary(S) cap boundary(S')| >= c |S'|.  The boundary intersection for
    fixed |S'| = m is minimized by the m vertices of S with the fewest edges
    leaving S, so prefix sums of the sorted per-vertex counts decide every m
    at once.  The subset-size floor is ceil((1 - epsilon) |S|) computed in
    exact rational arithmetic.

    Raises:
        ValueError: if S is empty, epsilon is outside (0, 1), or c <= 0.
    """
    S = _as_mask(graph, S)
    size = int(S.sum())
    if size == 0:
        raise ValueError("expansion check needs a nonempty vertex set")
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    if not c > 0:
        raise ValueError(f"c must be positive, got {c!r}")
    heads, _ = _cut_entries(graph, S)
    per_vertex = np.bincount(heads, minlength=graph.num_vertices)[S]
    per_vertex.sort()
    prefix = np.cumsum(per_vertex)
    m_floor = int(math.ceil((1 - Fraction(float(epsilon))) * size))
    m_floor = max(m_floor, 1)
    sizes = np.arange(m_floor, size + 1)
    margins = prefix[sizes - 1] - c * sizes
    worst = int(np.argmin(margins))
    return ExpansionVerdict(
        holds=bool(margins[worst] >= 0),
        epsilon=float(epsilon),
        c=float(c),
        set_size=size,
        min_subset_size=m_floor,
        worst_subset_size=int(sizes[worst]),
        worst_boundary=int(prefix[sizes[worst] - 1]),
        required=float(c * sizes[worst]),
    )


def _undirected_edges(graph: SmallWorldGraph) -> np.ndarray:
    heads = np.repeat(np.arange(graph.num_vertices), graph.degrees)
    tails = graph.indices
    keep = heads < tails
    return np.column_stack([heads[keep], tails[keep]])


def _neighbor_sets(adjacency_pairs, count):
    sets = [set() for _ in range(count)]
    for a, b in adjacency_pairs:
        sets[a].add(b)
        sets[b].add(a)
    return sets


def _connected_sets(neighbor_sets, max_size):
    """Yield every connected vertex set of size <= max_size exactly once.

    Anchored growth: sets are grouped by their minimum element; candidates
    are extended one vertex at a time, and a vertex rejected at some branch
    is banned from the whole subtree, which makes the enumeration exact.
    """
    n = len(neighbor_sets)

    def grow(members, cand, banned):
        yield members
        if len(members) == max_size:
            return
        cand = sorted(cand)
        banned = set(banned)
        for u in cand:
            extra = {
                w
                for w in neighbor_sets[u]
                if w > anchor and w not in members and w not in banned
            }
            rest = (set(cand) - {u} - banned) | (extra - set(cand))
            yield from grow(members | {u}, rest - members, banned)
            banned.add(u)

    for anchor in range(n):
        start_cand = {w for w in neighbor_sets[anchor] if w > anchor}
        yield from grow(frozenset([anchor]), start_cand, set())


def min_conductance_bruteforce(graph: SmallWorldGraph, connected_only=False):
    """Exhaustive minimum conductance; returns (phi, witness mask).

    With connected_only=False every proper nonempty subset is scanned
    (feasible only up to BRUTE_ALL_SUBSETS_MAX_VERTICES vertices); with
    connected_only=True the scan is restricted to sets whose induced
    subgraph is connected, enumerated by anchored growth, so the cost is
    proportional to the number of such sets.

    Raises:
        CapacityError: above the respective vertex cap.
    """
    N = graph.num_vertices
    edges = _undirected_edges(graph)
    degrees = graph.degrees
    if connected_only:
        if N > BRUTE_CONNECTED_MAX_VERTICES:
            raise CapacityError(
                f"connected enumeration capped at {BRUTE_CONNECTED_MAX_VERTICES} vertices, got {N}"
            )
        nbr = _neighbor_sets(edges, N)
        best_phi, best_set = math.inf, None
        for members in _connected_sets(nbr, N - 1):
            idx = np.fromiter(members, dtype=np.int64)
            dsum = int(degrees[idx].sum())
            inside = np.zeros(N, dtype=bool)
            inside[idx] = True
            cut = int((inside[edges[:, 0]] != inside[edges[:, 1]]).sum())
            phi = _conductance_from(graph, cut, dsum)
            if phi < best_phi:
                best_phi, best_set = phi, inside
        return best_phi, best_set

    if N > BRUTE_ALL_SUBSETS_MAX_VERTICES:
        raise CapacityError(
            f"all-subsets scan capped at {BRUTE_ALL_SUBSETS_MAX_VERTICES} vertices, got {N}"
        )
    total = 2 * graph.edge_count
    best_phi, best_code = math.inf, None
    chunk = 1 << 18
    bit_cols = np.arange(N, dtype=np.uint32)
    for lo in range(1, 2**N - 1, chunk):
        codes = np.arange(lo, min(lo + chunk, 2**N - 1), dtype=np.uint64)
        bits = ((codes[:, None] >> bit_cols) & 1).astype(bool)
        dsum = bits @ degrees
        cut = np.zeros(codes.size, dtype=np.int64)
        for u, v in edges:
            cut += bits[:, u] != bits[:, v]
        phi = cut * total / (dsum * (total - dsum))
        i = int(np.argmin(phi))
        if phi[i] < best_phi:
            best_phi = float(phi[i])
            best_code = int(codes[i])
    witness = ((best_code >> np.arange(N)) & 1).astype(bool)
    return best_phi, witness


def sweep_cut(graph: SmallWorldGraph):
    """Conductance sweep along the second eigenvector of the lazy kernel.

    Vertices are ordered by the kernel's second right eigenvector (computed
    on the symmetrized kernel, then rescaled by D^(-1/2)); the N - 1 proper
    prefixes of that order are scored incrementally in O(|E|) total.

    Returns:
        List of CutReport, one per proper prefix, in sweep order.
    """
    lam, x = second_eigenpair(graph)
    del lam
    values = x / np.sqrt(graph.degrees)
    order = np.argsort(values, kind="stable")
    N = graph.num_vertices
    total = 2 * graph.edge_count
    in_set = np.zeros(N, dtype=bool)
    nbr_in_count = np.zeros(N, dtype=np.int64)
    dsum = 0
    cut = 0
    vboundary = 0
    reports = []
    for k in range(N - 1):
        v = int(order[k])
        nbrs = graph.indices[graph.indptr[v] : graph.indptr[v + 1]]
        inside_nbrs = int(in_set[nbrs].sum())
        deg = int(graph.degrees[v])
        cut += deg - 2 * inside_nbrs
        dsum += deg
        if nbr_in_count[v] > 0:
            vboundary -= 1  # v was on the outside boundary, now absorbed
        in_set[v] = True
        fresh = nbrs[(nbr_in_count[nbrs] == 0) & ~in_set[nbrs]]
        vboundary += int(fresh.size)
        nbr_in_count[nbrs] += 1
        reports.append(
            CutReport(
                set_size=k + 1,
                edge_boundary=cut,
                vertex_boundary=vboundary,
                degree_sum=dsum,
                conductance=cut * total / (dsum * (total - dsum)),
                alpha=(k + 1) / N,
            )
        )
    return reports


def ball_set(n, radius) -> np.ndarray:
    """Mask of the L1 ball of the given radius around the origin.

    The ball has 1 + 2 * radius * (radius + 1) vertices; radius must lie in
    [1, n] so the ball never wraps onto itself.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"torus parameter n must be an integer >= 1, got {n!r}")
    if not isinstance(radius, (int, np.integer)) or not 1 <= radius <= n:
        raise ValueError(f"radius must be an integer in [1, n={n}], got {radius!r}")
    side = 2 * n + 1
    gx, gy = np.divmod(np.arange(side * side), side)
    return (np.abs(gx - n) + np.abs(gy - n)) <= radius


def count_connected_box_sets(graph: SmallWorldGraph, partition: BoxPartition, q) -> int:
    """Number of ways to pick q distinct boxes whose union is connected in G.

    Two boxes are adjacent when any graph edge (torus or long-range) joins
    them; a union of boxes is connected in G exactly when the picked boxes
    form a connected set in that box graph, since each box is internally
    connected.  Counted by exhaustive anchored-growth enumeration.

    Raises:
        CapacityError: if the partition has more than BOX_GRAPH_MAX_BOXES
            boxes or q exceeds BOX_SET_MAX_SIZE.
        ValueError: if q < 1 or the partition does not match the graph.
    """
    if partition.n != graph.n:
        raise ValueError("partition and graph have different torus parameters")
    if not 1 <= q:
        raise ValueError(f"q must be >= 1, got {q!r}")
    if q > BOX_SET_MAX_SIZE:
        raise CapacityError(f"box-set size capped at {BOX_SET_MAX_SIZE}, got q={q}")
    Q = partition.num_boxes
    if Q > BOX_GRAPH_MAX_BOXES:
        raise CapacityError(f"box graph capped at {BOX_GRAPH_MAX_BOXES} boxes, got {Q}")
    labels = partition.labels
    heads = np.repeat(np.arange(graph.num_vertices), graph.degrees)
    lu = labels[heads]
    lv = labels[graph.indices]
    cross = lu != lv
    pair_codes = np.unique(lu[cross].astype(np.int64) * Q + lv[cross])
    pairs = np.column_stack([pair_codes // Q, pair_codes % Q])
    nbr = _neighbor_sets(pairs, Q)
    count = 0
    for members in _connected_sets(nbr, q):
        if len(members) == q:
            count += 1
    return count


def diameter(graph: SmallWorldGraph, exact=True) -> int:
    """Graph diameter; exact by default, else a double-sweep lower bound.

    Raises:
        CapacityError: above DIAMETER_MAX_VERTICES vertices.
    """
    if graph.num_vertices > DIAMETER_MAX_VERTICES:
        raise CapacityError(
            f"diameter computation capped at {DIAMETER_MAX_VERTICES} vertices, got {graph.num_vertices}"
        )
    if exact:
        return bfs.exact_diameter(graph)
    _, _, lower = bfs.double_sweep(graph)
    return lower
