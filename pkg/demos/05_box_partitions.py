"""Box partitions, the box-core dichotomy, and connected box-set counts.

The torus splits into boxes with sides between l and 2l.  Every vertex set S
then satisfies a dichotomy: either most of S is covered by fully-occupied
boxes (a large box-core), or S has a large torus edge boundary.  Counting
box-like sets that are connected through the sampled graph (W_q) stays far
below the n^2 (40 l^2)^q expectation bound.
"""

import numpy as np

from swmix import (
    ModelParams,
    box_core,
    box_core_dichotomy,
    count_connected_box_sets,
    make_box_partition,
    mask_from_indices,
    num_vertices,
    sample_graph,
    torus_boundary_count,
)

n, ell = 6, 2
N = num_vertices(n)
part = make_box_partition(n, ell)
print(f"n={n}: {N} vertices into {part.num_boxes} boxes, sizes {sorted(set(part.sizes.tolist()))}")

# a box-like set has full core; a random sprinkle has a big boundary instead
full_box = part.labels == 0
sprinkle = mask_from_indices(np.arange(0, N, 7), n)
for name, S in (("one full box", full_box), ("every 7th vertex", sprinkle)):
    core = int(box_core(S, part).sum())
    bd = int(torus_boundary_count(S, n))
    holds = box_core_dichotomy(S, part, 0.5)
    print(f"  {name:17s}: |S|={int(S.sum()):3d}  |core|={core:3d}  |torus bd|={bd:3d}  dichotomy {holds}")

rng = np.random.default_rng(0)
checks = 2000
ok = sum(
    box_core_dichotomy(
        mask_from_indices(rng.choice(N, size=int(rng.integers(1, N + 1)), replace=False), n),
        part,
        float(rng.uniform(0.05, 0.95)),
    )
    for _ in range(checks)
)
print(f"dichotomy holds on {ok}/{checks} random sets (it is a theorem, so always)")

print("\nconnected box-set counts W_q vs the expectation bound, 20 seeds")
for q in (1, 2, 3):
    counts = []
    for seed in range(20):
        g = sample_graph(ModelParams(n=n, r=2.5, seed=seed))
        counts.append(count_connected_box_sets(g, part, q))
    print(f"  q={q}: mean W_q {np.mean(counts):9.1f}   bound {float(n * n) * (40.0 * ell * ell) ** q:12.0f}")
