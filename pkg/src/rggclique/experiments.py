"""Monte Carlo harness: success-rate grids over (mu, k) cells and the
classifier phase diagram, both emitted as deterministic CSV.

Trial seeds are derived from the master seed and the cell/trial indices with
a splitmix64 chain, so any trial can be reproduced in isolation and cells can
run in any order (or concurrently) without changing the aggregate.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CliqueTooLargeError, ModelDomainError, UsageError
from .recovery import cn_recover, evaluate, vd_recover
from .rgg import plant_clique, sample_instance
from .thresholds import ClassifierConfig, ModelParams, classify_regime

_MASK64 = (1 << 64) - 1

GRID_CSV_COLUMNS = ("n", "d", "mu", "r", "k", "trials", "skipped", "method",
                    "success_rate", "mean_N", "master_seed")
PHASE_CSV_COLUMNS = ("n", "d", "mu", "k", "alpha", "T", "t",
                     "vd_verdict", "cn_verdict")

_METHODS = {"VD": vd_recover, "CN": cn_recover}


@dataclass(frozen=True)
class ExperimentConfig:
    """One success-rate sweep: the (mu, k) grid and how to sample each cell."""

    n: float
    d: int
    mu_values: tuple[float, ...]
    k_values: tuple[int, ...]
    trials: int = 200
    master_seed: int = 0
    methods: tuple[str, ...] = ("VD", "CN")
    fixed_count: int | None = None

    def __post_init__(self):
        if not self.mu_values or not self.k_values:
            raise UsageError("the experiment grid must not be empty")
        if self.trials < 1:
            raise UsageError("at least one trial per cell is required")
        for k in self.k_values:
            if k < 2:
                raise UsageError(f"clique sizes must be at least 2, got {k}")
        unknown = set(self.methods) - set(_METHODS)
        if unknown:
            raise UsageError(f"unknown methods: {sorted(unknown)}")
        for mu in self.mu_values:
            ModelParams.from_mu(self.n, self.d, mu)  # raises if r >= 1/4

    @classmethod
    def from_mapping(cls, mapping):
        """Build from a flat key=value mapping (string values allowed)."""
        known = {
            "n": float, "d": int, "trials": int, "master_seed": int,
            "fixed_count": lambda s: None if s == "" else int(s),
        }
        kwargs = {}
        for key, raw in mapping.items():
            if key == "mu":
                kwargs["mu_values"] = tuple(float(x) for x in _split_list(raw))
            elif key == "k":
                kwargs["k_values"] = tuple(int(x) for x in _split_list(raw))
            elif key == "methods":
                kwargs["methods"] = tuple(str(x).upper() for x in _split_list(raw))
            elif key in known:
                kwargs[key] = known[key](raw)
            else:
                raise UsageError(f"unknown experiment config key: {key}")
        missing = {"n", "d", "mu_values", "k_values"} - set(kwargs)
        if missing:
            raise UsageError(f"missing experiment config keys: {sorted(missing)}")
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path):
        """Parse a key=value config file (one pair per line, # comments)."""
        mapping = {}
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                stripped = line.split("#", 1)[0].strip()
                if not stripped:
                    continue
                if "=" not in stripped:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, value = stripped.split("=", 1)
                mapping[key.strip()] = value.strip()
        return cls.from_mapping(mapping)


def _split_list(raw):
    if isinstance(raw, (list, tuple)):
        return raw
    return [part for part in str(raw).replace(",", " ").split() if part]


@dataclass(frozen=True)
class TrialRecord:
    """Outcome of a single planted-recovery trial."""

    n: float
    d: int
    mu: float
    radius: float
    k: int
    trial_index: int
    seed: int
    vertex_count: int
    skipped: bool
    success: dict
    wall_time: float


@dataclass(frozen=True)
class CellResult:
    """Aggregated trials of one (mu, k) grid cell."""

    mu: float
    radius: float
    k: int
    trials: int
    skipped: int
    successes: dict
    mean_vertex_count: float

    def success_rate(self, method):
        effective = self.trials - self.skipped
        if effective == 0:
            return math.nan
        return self.successes[method] / effective


def splitmix64(value):
    """One splitmix64 scramble step (the standard 64-bit finalizer)."""
    value = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = value
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_trial_seed(master_seed, mu_index, k_index, trial_index):
    """Trial seed = splitmix64 chain over (master, mu index, k index, trial index)."""
    seed = splitmix64(master_seed & _MASK64)
    for value in (mu_index, k_index, trial_index):
        seed = splitmix64(seed ^ (value & _MASK64))
    return seed


def run_trial(config, mu_index, k_index, trial_index):
    """Sample one planted instance for the given cell and score each method."""
    mu = config.mu_values[mu_index]
    k = config.k_values[k_index]
    params = ModelParams.from_mu(config.n, config.d, mu)
    seed = derive_trial_seed(config.master_seed, mu_index, k_index, trial_index)
    start = time.perf_counter()
    graph = sample_instance(params, seed, fixed_count=config.fixed_count)
    try:
        instance = plant_clique(graph, k, seed)
    except CliqueTooLargeError:
        return TrialRecord(n=config.n, d=config.d, mu=mu, radius=params.radius,
                           k=k, trial_index=trial_index, seed=seed,
                           vertex_count=graph.num_vertices, skipped=True,
                           success={}, wall_time=time.perf_counter() - start)
    success = {}
    for method in config.methods:
        result = _METHODS[method](instance.graph, k)
        success[method] = bool(evaluate(result, instance.clique).exact_match)
    return TrialRecord(n=config.n, d=config.d, mu=mu, radius=params.radius,
                       k=k, trial_index=trial_index, seed=seed,
                       vertex_count=graph.num_vertices, skipped=False,
                       success=success, wall_time=time.perf_counter() - start)


def _run_cell(config, mu_index, k_index):
    mu = config.mu_values[mu_index]
    k = config.k_values[k_index]
    radius = ModelParams.from_mu(config.n, config.d, mu).radius
    skipped = 0
    successes = {method: 0 for method in config.methods}
    total_vertices = 0
    for trial_index in range(config.trials):
        record = run_trial(config, mu_index, k_index, trial_index)
        total_vertices += record.vertex_count
        if record.skipped:
            skipped += 1
            continue
        for method in config.methods:
            successes[method] += record.success[method]
    return CellResult(mu=mu, radius=radius, k=k, trials=config.trials,
                      skipped=skipped, successes=successes,
                      mean_vertex_count=total_vertices / config.trials)


def _cell_worker(args):
    return _run_cell(*args)


@dataclass(frozen=True)
class GridResult:
    """All cell aggregates of one sweep, in grid order (mu-major, then k)."""

    config: ExperimentConfig
    cells: tuple[CellResult, ...]

    def cell(self, mu, k):
        for cell in self.cells:
            if cell.mu == mu and cell.k == k:
                return cell
        raise KeyError(f"no cell (mu={mu}, k={k})")

    def to_csv(self):
        lines = [",".join(GRID_CSV_COLUMNS)]
        for cell in self.cells:
            for method in self.config.methods:
                lines.append(",".join((
                    _fmt(self.config.n), str(self.config.d), _fmt(cell.mu),
                    _fmt(cell.radius), str(cell.k), str(cell.trials),
                    str(cell.skipped), method, _fmt(cell.success_rate(method)),
                    _fmt(cell.mean_vertex_count), str(self.config.master_seed),
                )))
        return "\n".join(lines) + "\n"

    def write_csv(self, path):
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_csv())


def run_grid(config, workers=1):
    """Run every (mu, k) cell of the sweep; cells may execute concurrently.

    Aggregation is pure counting per cell, so the result (and its CSV bytes)
    is independent of the worker count.
    """
    coords = [(mu_index, k_index)
              for mu_index in range(len(config.mu_values))
              for k_index in range(len(config.k_values))]
    if workers <= 1:
        cells = [_run_cell(config, *coord) for coord in coords]
    else:
        args = [(config, mu_index, k_index) for mu_index, k_index in coords]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_cell_worker, args))
    return GridResult(config=config, cells=tuple(cells))


# --- phase diagram -----------------------------------------------------------

@dataclass(frozen=True)
class PhaseCell:
    mu: float
    k: float
    alpha: float
    t_n: float
    T_n: float
    vd: str
    cn: str


@dataclass(frozen=True)
class PhaseTable:
    n: float
    d: int
    epsilon: float
    cells: tuple[PhaseCell, ...]

    def to_csv(self):
        lines = [",".join(PHASE_CSV_COLUMNS)]
        for cell in self.cells:
            lines.append(",".join((
                _fmt(self.n), str(self.d), _fmt(cell.mu), _fmt(cell.k),
                _fmt(cell.alpha), _fmt(cell.T_n), _fmt(cell.t_n),
                cell.vd, cell.cn,
            )))
        return "\n".join(lines) + "\n"

    def write_csv(self, path):
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_csv())


def phase_diagram(n, d, mu_values, k_values, epsilon=0.1, classifier=None):
    """Classify every (mu, k) cell; out-of-domain cells are marked ILL_POSED
    rather than dropped.  Grids are expected positive (typically log-spaced);
    fractional k is classified through the gamma continuation.
    """
    if len(mu_values) == 0 or len(k_values) == 0:
        raise UsageError("the phase grid must not be empty")
    classifier = classifier or ClassifierConfig()
    cells = []
    for mu in mu_values:
        try:
            params = ModelParams.from_mu(n, d, mu)
        except ModelDomainError:
            params = None
        for k in k_values:
            if params is None:
                cells.append(PhaseCell(mu=mu, k=k, alpha=math.nan,
                                       t_n=math.nan, T_n=math.nan,
                                       vd="ILL_POSED", cn="ILL_POSED"))
                continue
            try:
                verdict = classify_regime(params, k, epsilon, classifier)
            except ModelDomainError:
                cells.append(PhaseCell(mu=mu, k=k, alpha=params.alpha,
                                       t_n=math.nan, T_n=math.nan,
                                       vd="ILL_POSED", cn="ILL_POSED"))
                continue
            cells.append(PhaseCell(mu=mu, k=k, alpha=verdict.alpha,
                                   t_n=verdict.t_n, T_n=verdict.T_n,
                                   vd=verdict.vd.value, cn=verdict.cn.value))
    return PhaseTable(n=float(n), d=int(d), epsilon=float(epsilon),
                      cells=tuple(cells))


def _fmt(value):
    value = float(value)
    if math.isnan(value):
        return "nan"
    return repr(value)
