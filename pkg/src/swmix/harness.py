"""Seeded parameter sweeps over (n, r) grids with deterministic emission.

Each grid cell (n, r, seed) is measured independently.  When seeds are not
listed explicitly, the per-cell seed of replicate k is the first 8 bytes of
sha256("{base}:{n}:{r_hex}:{k}") with r in exact float hex, so replicates are
independent and any single cell can be reproduced in isolation.  Auxiliary
random streams inside a cell reuse the instance seed under reserved Philox
spawn keys: routing pair selection uses spawn_key (0, 3) and random-set
expansion statistics use (0, 4); graph sampling owns keys (d,) for distance
classes d >= 2 plus (1,), and the walk heuristics own (0, 1) and (0, 2).

Cells run under a bounded thread pool (the SWMIX_WORKERS environment
variable overrides the width) and records are sorted by (n, r, seed) before
emission, so output files are byte-identical regardless of schedule.  CSV
output has a header row, one row per record with reals at 17 significant
digits, and a trailing "# manifest ..." line carrying the config hash and
seed base; JSON output is an array of record objects whose final element is
the manifest object.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
import os
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import expansion
from ._version import __version__
from .errors import CapacityError
from .generate import ModelParams, SmallWorldGraph, sample_graph
from .torus import (
    index_to_coord,
    make_box_partition,
    mask_from_indices,
    num_vertices,
    torus_distance,
)
from .walk import EXACT_STARTS_MAX_VERTICES, mixing_time, second_eigenpair, stationary

__all__ = [
    "EXPERIMENTS",
    "WORKERS_ENV_VAR",
    "SweepConfig",
    "ExperimentRecord",
    "RoutingResult",
    "derive_seed",
    "config_digest",
    "run_mixing_sweep",
    "run_conductance_sweep",
    "run_diameter_sweep",
    "run_wq_experiment",
    "run_routing_sweep",
    "run_expansion_sweep",
    "run_sweep",
    "greedy_route",
    "emit",
    "load_records",
    "load_sweep_config",
]

EXPERIMENTS = ("mix", "conductance", "diameter", "routing", "wq", "expansion")

WORKERS_ENV_VAR = "SWMIX_WORKERS"

_COMMON_FIELDS = ("experiment", "n", "r", "seed", "num_vertices", "edge_count", "normalizer", "version")

# Column typing for parsing emitted files back; w_* columns are also integers.
_STR_FIELDS = frozenset({"experiment", "version"})
_INT_FIELDS = frozenset(
    {
        "n",
        "seed",
        "num_vertices",
        "edge_count",
        "t_mix",
        "t_mix_exact",
        "diameter",
        "diameter_lower",
        "ball_radius",
        "ball_size",
        "ball_edge_boundary",
        "ball_vertex_boundary",
        "pairs",
        "delivered_count",
        "max_hops",
        "box_side",
        "num_boxes",
        "random_sets",
        "ec_holds",
    }
)


def derive_seed(base, n, r, replicate) -> int:
    """Stable 64-bit instance seed for replicate ``replicate`` of cell (n, r).

    First 8 bytes, big-endian, of sha256 over "{base}:{n}:{r_hex}:{replicate}"
    where r_hex is the exact float hex of r.
    """
    msg = f"{int(base)}:{int(n)}:{float(r).hex()}:{int(replicate)}".encode("ascii")
    return int.from_bytes(hashlib.sha256(msg).digest()[:8], "big")


@dataclass(frozen=True)
class SweepConfig:
    """One experiment grid: (n, r) values, seeding, policy knobs, output.

    Seeds come either from ``seeds`` (an explicit tuple shared by every grid
    cell) or from ``num_seeds`` replicates derived per cell from ``seed_base``
    via :func:`derive_seed`; exactly one form must be used.  ``starts`` is the
    mixing start policy, ``ball_frac`` the ball-radius fraction of the
    conductance experiment, ``include_sweep_min`` toggles its spectral
    sweep-cut column, ``box_side``/``q_max`` parametrize the connected
    box-set counts, ``pairs`` the routing sample, and ``random_sets`` the
    random-set sample of the expansion experiment.
    """

    experiment: str
    n_values: tuple
    r_values: tuple
    seeds: tuple | None = None
    num_seeds: int = 0
    seed_base: int = 0
    output: str | None = None
    starts: str = "auto"
    workers: int | None = None
    ball_frac: float = 0.9
    include_sweep_min: bool = True
    box_side: int = 2
    q_max: int = 3
    pairs: int = 100
    random_sets: int = 500

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"experiment must be one of {EXPERIMENTS}, got {self.experiment!r}")
        n_values = tuple(self.n_values)
        if not n_values or any(not isinstance(v, (int, np.integer)) or v < 1 for v in n_values):
            raise ValueError(f"n_values must be a nonempty list of integers >= 1, got {self.n_values!r}")
        r_values = tuple(float(v) for v in self.r_values)
        if not r_values or any(math.isnan(v) or v < 0 for v in r_values):
            raise ValueError(f"r_values must be a nonempty list of reals >= 0, got {self.r_values!r}")
        object.__setattr__(self, "n_values", tuple(int(v) for v in n_values))
        object.__setattr__(self, "r_values", r_values)
        if self.seeds is not None:
            seeds = tuple(int(s) for s in self.seeds)
            if not seeds or any(not 0 <= s < 2**64 for s in seeds):
                raise ValueError("explicit seeds must be a nonempty list of 64-bit unsigned integers")
            if self.num_seeds:
                raise ValueError("give either explicit seeds or num_seeds, not both")
            object.__setattr__(self, "seeds", seeds)
        else:
            if not isinstance(self.num_seeds, (int, np.integer)) or self.num_seeds < 1:
                raise ValueError("num_seeds must be >= 1 when no explicit seeds are given")
            object.__setattr__(self, "num_seeds", int(self.num_seeds))
        if not isinstance(self.seed_base, (int, np.integer)) or not 0 <= self.seed_base < 2**64:
            raise ValueError(f"seed_base must be a 64-bit unsigned integer, got {self.seed_base!r}")
        if self.starts not in ("auto", "all", "heuristic"):
            raise ValueError(f"starts must be 'auto', 'all', or 'heuristic', got {self.starts!r}")
        if self.workers is not None and (not isinstance(self.workers, (int, np.integer)) or self.workers < 1):
            raise ValueError(f"workers must be a positive integer, got {self.workers!r}")
        if not 0 < float(self.ball_frac) < 1:
            raise ValueError(f"ball_frac must lie in (0, 1), got {self.ball_frac!r}")
        object.__setattr__(self, "ball_frac", float(self.ball_frac))
        for name in ("box_side", "q_max", "pairs", "random_sets"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
            object.__setattr__(self, name, int(v))

    def instance_seeds(self, n, r) -> tuple:
        """Seeds used for grid cell (n, r), in replicate order."""
        if self.seeds is not None:
            return self.seeds
        return tuple(derive_seed(self.seed_base, n, r, k) for k in range(self.num_seeds))


def config_digest(cfg: SweepConfig) -> str:
    """sha256 hex digest over every config field, reals in exact float hex."""

    def canon(v):
        if isinstance(v, float):
            return v.hex()
        if isinstance(v, tuple):
            return "(" + ",".join(canon(x) for x in v) + ")"
        return repr(v)

    parts = [f"{f.name}={canon(getattr(cfg, f.name))}" for f in dataclasses.fields(cfg)]
    return hashlib.sha256(";".join(parts).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class ExperimentRecord:
    """One measured grid cell; ``values`` holds the experiment-specific fields.

    The common fields (n, r, seed, sizes, normalizer, package version) are
    enough provenance to regenerate the record bit for bit.
    """

    experiment: str
    n: int
    r: float
    seed: int
    num_vertices: int
    edge_count: int
    normalizer: float
    version: str
    values: dict

    def as_row(self) -> dict:
        """Flat column -> value mapping, common fields first."""
        row = {name: getattr(self, name) for name in _COMMON_FIELDS}
        row.update(self.values)
        return row


@dataclass(frozen=True)
class RoutingResult:
    """Greedy routing outcome for one (source, target) pair."""

    source: int
    target: int
    hops: int
    delivered: bool


def _record(cfg: SweepConfig, graph: SmallWorldGraph, values: dict) -> ExperimentRecord:
    p = graph.params
    return ExperimentRecord(
        experiment=cfg.experiment,
        n=p.n,
        r=p.r,
        seed=p.seed,
        num_vertices=graph.num_vertices,
        edge_count=graph.edge_count,
        normalizer=graph.normalizer,
        version=__version__,
        values=values,
    )


def _worker_count(cfg: SweepConfig) -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env is not None:
        workers = int(env)
        if workers < 1:
            raise ValueError(f"{WORKERS_ENV_VAR} must be a positive integer, got {env!r}")
        return workers
    if cfg.workers is not None:
        return cfg.workers
    return min(8, os.cpu_count() or 1)


def _run_grid(cfg: SweepConfig, cell) -> list:
    jobs = [
        (n, r, seed)
        for n in cfg.n_values
        for r in cfg.r_values
        for seed in cfg.instance_seeds(n, r)
    ]
    workers = _worker_count(cfg)
    if workers == 1 or len(jobs) == 1:
        records = [cell(n, r, seed) for n, r, seed in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda job: cell(*job), jobs))
    records.sort(key=lambda rec: (rec.n, rec.r, rec.seed))
    return records


def _require_experiment(cfg: SweepConfig, kind: str) -> None:
    if cfg.experiment != kind:
        raise ValueError(f"config experiment is {cfg.experiment!r}, expected {kind!r}")


def run_mixing_sweep(cfg: SweepConfig) -> list:
    """Mixing time, spectral gap, exact diameter, and pi_min per grid cell.

    The start policy comes from cfg.starts: "all" evolves every point mass
    (exact mixing time, capped at EXACT_STARTS_MAX_VERTICES vertices),
    "heuristic" uses the documented start set, and "auto" switches between
    them on the cap.  t_mix_exact records which one happened.

    Raises:
        CapacityError: if cfg demands exact starts for an n over the cap.
    """
    _require_experiment(cfg, "mix")
    if cfg.starts == "all":
        for n in cfg.n_values:
            if num_vertices(n) > EXACT_STARTS_MAX_VERTICES:
                raise CapacityError(
                    f"exact mixing starts need N <= {EXACT_STARTS_MAX_VERTICES}; "
                    f"n={n} has N={num_vertices(n)}"
                )

    def cell(n, r, seed):
        graph = sample_graph(ModelParams(n=n, r=r, seed=seed))
        est = mixing_time(graph, starts=cfg.starts)
        lam, _ = second_eigenpair(graph)
        diam = expansion.diameter(graph, exact=True)
        values = {
            "t_mix": int(est.t_mix),
            "t_mix_exact": int(est.exact),
            "gap": 1.0 - lam,
            "diameter": int(diam),
            "pi_min": float(stationary(graph).min()),
        }
        return _record(cfg, graph, values)

    return _run_grid(cfg, cell)


def run_conductance_sweep(cfg: SweepConfig) -> list:
    """Ball-cut report at radius floor(ball_frac * n) per grid cell.

    Records the full cut report of the L1 ball (size, edge and vertex
    boundary, conductance) plus the independently computed complement
    conductance; with include_sweep_min also the minimum conductance over
    the spectral sweep-cut prefixes.
    """
    _require_experiment(cfg, "conductance")
    for n in cfg.n_values:
        if int(cfg.ball_frac * n) < 1:
            raise ValueError(f"ball radius floor({cfg.ball_frac} * {n}) is zero; increase n or ball_frac")

    def cell(n, r, seed):
        radius = int(cfg.ball_frac * n)
        graph = sample_graph(ModelParams(n=n, r=r, seed=seed))
        ball = expansion.ball_set(n, radius)
        report = expansion.cut_report(graph, ball)
        values = {
            "ball_radius": radius,
            "ball_size": report.set_size,
            "ball_edge_boundary": report.edge_boundary,
            "ball_vertex_boundary": report.vertex_boundary,
            "phi_ball": report.conductance,
            "phi_ball_complement": expansion.conductance(graph, ~ball),
        }
        if cfg.include_sweep_min:
            values["phi_sweep_min"] = min(rp.conductance for rp in expansion.sweep_cut(graph))
        return _record(cfg, graph, values)

    return _run_grid(cfg, cell)


def run_diameter_sweep(cfg: SweepConfig) -> list:
    """Exact diameter and the double-sweep lower bound per grid cell."""
    _require_experiment(cfg, "diameter")

    def cell(n, r, seed):
        graph = sample_graph(ModelParams(n=n, r=r, seed=seed))
        values = {
            "diameter": int(expansion.diameter(graph, exact=True)),
            "diameter_lower": int(expansion.diameter(graph, exact=False)),
        }
        return _record(cfg, graph, values)

    return _run_grid(cfg, cell)


def run_wq_experiment(cfg: SweepConfig) -> list:
    """Connected box-set counts W_q for q = 1..q_max per grid cell.

    Each record carries the per-seed counts w_q next to the expectation
    bound n^2 (40 box_side^2)^q, so seed means can be compared downstream.

    Raises:
        CapacityError: propagated from the box-set counter when the
            partition or q exceeds its enumeration caps.
    """
    _require_experiment(cfg, "wq")

    def cell(n, r, seed):
        graph = sample_graph(ModelParams(n=n, r=r, seed=seed))
        partition = make_box_partition(n, cfg.box_side)
        values = {"box_side": cfg.box_side, "num_boxes": partition.num_boxes}
        for q in range(1, cfg.q_max + 1):
            values[f"w_{q}"] = int(expansion.count_connected_box_sets(graph, partition, q))
            values[f"bound_{q}"] = float(n) ** 2 * (40.0 * cfg.box_side**2) ** q
        return _record(cfg, graph, values)

    return _run_grid(cfg, cell)


def greedy_route(graph: SmallWorldGraph, source, target, hop_cap=None) -> RoutingResult:
    """Greedy torus-distance routing from source to target.

    Each step moves to the neighbour (torus or long-range) minimizing the
    torus distance to the target, ties broken by smallest canonical index,
    stopping at the target or after hop_cap hops.  A torus neighbour that
    strictly decreases the distance always exists, so delivery is guaranteed
    and the default cap of 10 N is a safety net only.

    Raises:
        ValueError: for out-of-range vertices or hop_cap < 1.
    """
    N = graph.num_vertices
    source = int(source)
    target = int(target)
    if not 0 <= source < N:
        raise ValueError(f"source vertex {source} out of range")
    if not 0 <= target < N:
        raise ValueError(f"target vertex {target} out of range")
    if hop_cap is None:
        hop_cap = 10 * N
    if hop_cap < 1:
        raise ValueError(f"hop_cap must be >= 1, got {hop_cap!r}")
    n = graph.n
    tx, ty = index_to_coord(target, n)
    goal = np.array([tx, ty])
    cur = source
    hops = 0
    while cur != target and hops < hop_cap:
        nbrs = graph.neighbours(cur)
        xs, ys = index_to_coord(nbrs, n)
        dists = torus_distance(np.column_stack([xs, ys]), goal, n)
        cur = int(nbrs[int(np.argmin(dists))])  # nbrs sorted, so first argmin = smallest index
        hops += 1
    return RoutingResult(source=source, target=target, hops=hops, delivered=cur == target)


def run_routing_sweep(cfg: SweepConfig) -> list:
    """Greedy routing over cfg.pairs seeded uniform pairs per grid cell.

    Pair selection draws from the instance seed under spawn key (0, 3);
    records carry the delivered count and the median and max hop counts.
    """
    _require_experiment(cfg, "routing")

    def cell(n, r, seed):
        graph = sample_graph(ModelParams(n=n, r=r, seed=seed))
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(0, 3))
        rng = np.random.Generator(np.random.Philox(ss))
        pairs = rng.integers(0, graph.num_vertices, size=(cfg.pairs, 2))
        hops = []
        delivered = 0
        for s, t in pairs:
            result = greedy_route(graph, int(s), int(t))
            hops.append(result.hops)
            delivered += int(result.delivered)
        values = {
            "pairs": cfg.pairs,
            "delivered_count": delivered,
            "median_hops": float(statistics.median(hops)),
            "max_hops": int(max(hops)),
        }
        return _record(cfg, graph, values)

    return _run_grid(cfg, cell)


def run_expansion_sweep(cfg: SweepConfig) -> list:
    """Random-set expansion statistics per grid cell.

    Draws from the instance seed under spawn key (0, 4):
      - m_hat: max over cfg.random_sets uniform random sets (sizes uniform in
        [1, N/2]) of (degree_sum(S) - |edge boundary|) / |S|, an empirical
        average-degree constant.
      - vx_alpha, vx_ratio: one box-like set assembled from random partition
        boxes to a volume fraction alpha drawn uniformly from [0.1, 0.5], and
        its vertex-expansion ratio |vertex boundary| * ln n / (|S| * ln(1/alpha)).
      - ec_holds: whether a uniform random set of ceil(N/10) vertices is
        (0.1, 0.05)-expanding.
    """
    _require_experiment(cfg, "expansion")

    def cell(n, r, seed):
        graph = sample_graph(ModelParams(n=n, r=r, seed=seed))
        N = graph.num_vertices
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(0, 4))
        rng = np.random.Generator(np.random.Philox(ss))

        m_hat = 0.0
        for _ in range(cfg.random_sets):
            size = int(rng.integers(1, N // 2 + 1))
            S = mask_from_indices(rng.choice(N, size=size, replace=False), n)
            report = expansion.cut_report(graph, S)
            m_hat = max(m_hat, (report.degree_sum - report.edge_boundary) / report.set_size)

        partition = make_box_partition(n, cfg.box_side)
        target = float(rng.uniform(0.1, 0.5)) * N
        chosen = np.zeros(partition.num_boxes, dtype=bool)
        covered = 0
        for box in rng.permutation(partition.num_boxes):
            chosen[box] = True
            covered += int(partition.sizes[box])
            if covered >= target:
                break
        box_like = chosen[partition.labels]
        alpha = covered / N
        vb = int(expansion.vertex_boundary(graph, box_like).sum())
        vx_ratio = vb * math.log(n) / (covered * math.log(1.0 / alpha)) if n > 1 else 0.0

        size10 = max(1, math.ceil(N / 10))
        S10 = mask_from_indices(rng.choice(N, size=size10, replace=False), n)
        verdict = expansion.is_expanding(graph, S10, 0.1, 0.05)

        values = {
            "random_sets": cfg.random_sets,
            "m_hat": m_hat,
            "vx_alpha": alpha,
            "vx_ratio": vx_ratio,
            "ec_holds": int(verdict.holds),
        }
        return _record(cfg, graph, values)

    return _run_grid(cfg, cell)


_RUNNERS = {
    "mix": run_mixing_sweep,
    "conductance": run_conductance_sweep,
    "diameter": run_diameter_sweep,
    "routing": run_routing_sweep,
    "wq": run_wq_experiment,
    "expansion": run_expansion_sweep,
}


def run_sweep(cfg: SweepConfig) -> list:
    """Run the experiment named by cfg.experiment; records sorted by (n, r, seed)."""
    return _RUNNERS[cfg.experiment](cfg)


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def emit(records, fmt, path, config: SweepConfig) -> None:
    """Write records plus a reproducibility manifest to path.

    CSV: header row, one comma-separated row per record with reals at 17
    significant digits, then one "# manifest key=value ..." line.  JSON: an
    array of record objects whose last element is {"manifest": {...}}.  The
    byte content is a pure function of (records, fmt, config).

    Raises:
        ValueError: for empty records, mixed column sets, or an unknown
            format; nothing is written in these cases.
        OSError: propagated from the filesystem.
    """
    if not records:
        raise ValueError("no records to emit")
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    rows = [record.as_row() for record in records]
    columns = list(rows[0].keys())
    for row in rows[1:]:
        if list(row.keys()) != columns:
            raise ValueError("records do not share a single column set")
    manifest = {
        "config_sha256": config_digest(config),
        "seed_base": config.seed_base,
        "version": __version__,
    }
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_format_cell(row[c]) for c in columns) for row in rows)
        lines.append("# manifest " + " ".join(f"{k}={v}" for k, v in manifest.items()))
        text = "\n".join(lines) + "\n"
    else:
        payload = [
            {c: (row[c] if c in _STR_FIELDS else _coerce(c, row[c])) for c in columns}
            for row in rows
        ]
        payload.append({"manifest": manifest})
        text = json.dumps(payload, indent=1) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _coerce(column, value):
    if column in _STR_FIELDS:
        return str(value)
    if column in _INT_FIELDS or column.startswith("w_"):
        return int(value)
    return float(value)


def _record_from_row(row: dict) -> ExperimentRecord:
    common = {name: row[name] for name in _COMMON_FIELDS}
    values = {k: v for k, v in row.items() if k not in _COMMON_FIELDS}
    return ExperimentRecord(values=values, **common)


def load_records(path):
    """Read a file written by :func:`emit`; returns (records, manifest).

    The format is detected from the content (a leading '[' means JSON).

    Raises:
        ValueError: if the manifest is missing or a row is malformed.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        payload = json.loads(text)
        if not payload or "manifest" not in payload[-1]:
            raise ValueError("missing trailing manifest object")
        manifest = payload[-1]["manifest"]
        rows = [{c: _coerce(c, v) for c, v in obj.items()} for obj in payload[:-1]]
    else:
        lines = [line for line in text.splitlines() if line]
        if not lines or not lines[-1].startswith("# manifest "):
            raise ValueError("missing trailing manifest line")
        manifest = dict(
            item.split("=", 1) for item in lines[-1][len("# manifest ") :].split()
        )
        manifest["seed_base"] = int(manifest["seed_base"])
        columns = lines[0].split(",")
        rows = []
        for line in lines[1:-1]:
            cells = line.split(",")
            if len(cells) != len(columns):
                raise ValueError(f"row has {len(cells)} cells, header has {len(columns)}")
            rows.append({c: _coerce(c, v) for c, v in zip(columns, cells)})
    return [_record_from_row(row) for row in rows], manifest


_LIST_KEYS = frozenset({"n_values", "r_values", "seeds"})
_INT_KEYS = frozenset({"num_seeds", "seed_base", "workers", "box_side", "q_max", "pairs", "random_sets"})
_FLOAT_KEYS = frozenset({"ball_frac"})
_BOOL_KEYS = frozenset({"include_sweep_min"})


def _split_list(value):
    return [token.strip() for token in value.split(",") if token.strip()]


def _parse_config_value(key, value, lineno):
    try:
        if key == "n_values":
            return tuple(int(token) for token in _split_list(value))
        if key == "r_values":
            return tuple(float(token) for token in _split_list(value))
        if key == "seeds":
            return tuple(int(token) for token in _split_list(value))
        if key in _INT_KEYS:
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _BOOL_KEYS:
            lowered = value.lower()
            if lowered in ("true", "1", "yes"):
                return True
            if lowered in ("false", "0", "no"):
                return False
            raise ValueError(f"not a boolean: {value!r}")
        return value
    except ValueError as exc:
        raise ValueError(f"line {lineno}: bad value for {key}: {exc}") from None


def load_sweep_config(path) -> SweepConfig:
    """Parse a flat "key = value" config file into a SweepConfig.

    Blank lines and lines starting with '#' are skipped; list values are
    comma-separated.

    Raises:
        ValueError: on unknown or duplicate keys, malformed lines, or a
            config violating the SweepConfig invariants.
    """
    known = {f.name for f in dataclasses.fields(SweepConfig)}
    kwargs = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in known:
                raise ValueError(f"line {lineno}: unknown config key {key!r}")
            if key in kwargs:
                raise ValueError(f"line {lineno}: duplicate config key {key!r}")
            kwargs[key] = _parse_config_value(key, value, lineno)
    try:
        return SweepConfig(**kwargs)
    except TypeError as exc:
        raise ValueError(f"incomplete config: {exc}") from None
