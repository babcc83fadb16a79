"""Scenario sweeps, figure datasets, and CSV/JSON emission.

Sweeps are deterministic: identical inputs produce byte-identical CSV
files (floats are written with 13 significant digits, newline '\\n').
Rows whose configuration is Pauli-degenerate are emitted with empty value
cells and degenerate=true so downstream plots show gaps.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .configuration import (
    Configuration,
    exchange_matrix,
    isosceles_configuration,
    line_configuration,
    random_configuration,
    regular_simplex_configuration,
)
from .entanglement import (
    bipartition_label,
    coincident_entropy_bound,
    entanglement_report,
    single_fermion_bipartitions,
    negativity,
    two_fermion_negativity,
    witness_expectation,
)
from .exchange import pair_entanglement_threshold
from .pair_decomposition import fit_weights
from .qops import von_neumann_entropy
from .wick import DegenerateConfiguration, spin_density_matrix

SCENARIO_KINDS = ("line", "isosceles", "simplex", "entropy", "custom")
OUTPUT_KINDS = ("negativity", "entropy", "weights", "residual", "witnesses")

# Equal-weight mixture of all pair singlets for n = 4 has spectrum
# {1/12 x9, 1/8 x2, 0 x5}; its entropy is the competing coincident-limit
# prediction next to log2(2^n - (n+1)).
EQUAL_PAIR_MIXTURE_N4_BITS = 0.75 * math.log2(12.0) + 0.75


class ScenarioError(ValueError):
    """Invalid scenario file or figure parameters; message names the field."""


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    points: int

    def __post_init__(self):
        if self.points < 2:
            raise ScenarioError("grid.points must be at least 2")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ScenarioError("grid.start/stop must be finite")
        if not self.start < self.stop:
            raise ScenarioError("grid must be strictly increasing (start < stop)")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class ScenarioSpec:
    kind: str
    grid: GridSpec
    n: int | None = None
    positions: np.ndarray | None = None
    seed: int | None = None
    outputs: tuple[str, ...] = ()
    x_max: float = 5.0
    base: float = 1.0

    def __post_init__(self):
        if self.kind not in SCENARIO_KINDS:
            raise ScenarioError(
                f"kind must be one of {SCENARIO_KINDS}, got {self.kind!r}")
        outputs = tuple(self.outputs) or _default_outputs(self.kind)
        for o in outputs:
            if o not in OUTPUT_KINDS:
                raise ScenarioError(
                    f"outputs entries must be in {OUTPUT_KINDS}, got {o!r}")
        object.__setattr__(self, "outputs", outputs)
        n = self.n
        if self.kind in ("line", "isosceles"):
            if n not in (None, 3):
                raise ScenarioError(f"kind={self.kind} has n = 3, got n={n}")
            n = 3
        elif self.kind in ("simplex", "entropy"):
            if n is None:
                raise ScenarioError(f"kind={self.kind} requires field n")
            if n not in (2, 3, 4):
                raise ScenarioError(f"kind={self.kind} supports n in {{2,3,4}}")
        elif self.kind == "custom":
            if self.positions is None:
                raise ScenarioError("kind=custom requires field positions")
            pos = np.array(self.positions, dtype=float)
            if pos.ndim != 2 or pos.shape[1] != 3:
                raise ScenarioError("positions must be a list of [x, y, z] triples")
            if n is not None and n != pos.shape[0]:
                raise ScenarioError(
                    f"n={n} disagrees with {pos.shape[0]} positions")
            n = pos.shape[0]
            Configuration(pos)  # bounds/finiteness checks
            pos.setflags(write=False)
            object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "n", int(n))
        if self.kind == "line":
            if self.x_max <= 0:
                raise ScenarioError("x_max must be positive")
            if self.grid.start < 0 or self.grid.stop > self.x_max:
                raise ScenarioError("line grid must lie within [0, x_max]")
        elif self.kind == "isosceles":
            if self.base <= 0:
                raise ScenarioError("base must be positive")
            if self.grid.start < 0:
                raise ScenarioError("isosceles heights must be non-negative")
        elif self.grid.start < 0:
            raise ScenarioError("grid values must be non-negative")
        if "witnesses" in outputs and n != 3:
            raise ScenarioError("outputs=witnesses requires n = 3")

    @property
    def grid_name(self) -> str:
        return {"line": "x", "isosceles": "height", "simplex": "edge",
                "entropy": "edge", "custom": "x"}[self.kind]


def _default_outputs(kind: str) -> tuple[str, ...]:
    return ("entropy",) if kind == "entropy" else ("negativity",)


@dataclass(frozen=True)
class SweepResult:
    grid_name: str
    value_columns: tuple[str, ...]
    rows: tuple[dict, ...] = field(repr=False)
    metadata: dict = field(repr=False)

    @property
    def columns(self) -> list[str]:
        return [self.grid_name, *self.value_columns, "degenerate"]

    def column(self, name: str) -> np.ndarray:
        """One column as floats, NaN where a cell is degenerate."""
        if name not in self.columns[:-1]:
            raise KeyError(name)
        vals = [row.get(name) for row in self.rows]
        return np.array([math.nan if v is None else float(v) for v in vals])

    @property
    def all_degenerate(self) -> bool:
        return all(row["degenerate"] for row in self.rows)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(self.columns) + "\n")
            for row in self.rows:
                cells = [_fmt(row.get(c)) for c in self.columns[:-1]]
                cells.append("true" if row["degenerate"] else "false")
                fh.write(",".join(cells) + "\n")

    def report_dict(self) -> dict:
        meta = {k: v for k, v in self.metadata.items() if k != "analysis"}
        return {"metadata": meta,
                "analysis": dict(self.metadata.get("analysis", {}))}


def _fmt(v) -> str:
    if v is None:
        return ""
    return f"{float(v):.12e}"


def _sweep(grid_name, values, value_columns, row_fn, metadata) -> SweepResult:
    """Shared engine: one row per grid value; degeneracy flags, never aborts."""
    rows = []
    for v in values:
        row = {grid_name: float(v)}
        try:
            cells = row_fn(float(v))
        except DegenerateConfiguration:
            cells = {c: None for c in value_columns}
        row.update(cells)
        row["degenerate"] = any(row.get(c) is None for c in value_columns)
        rows.append(row)
    return SweepResult(grid_name=grid_name, value_columns=tuple(value_columns),
                       rows=tuple(rows), metadata=metadata)


def _scenario_columns(spec: ScenarioSpec) -> list[str]:
    n = spec.n
    cols: list[str] = []
    for out in spec.outputs:
        if out == "negativity":
            cols += [bipartition_label(p, n) for p in single_fermion_bipartitions(n)]
        elif out == "entropy":
            cols += [f"S{n}_bits", f"S{n}_nats"]
        elif out == "weights":
            cols += ["w0"] + [f"w_{a}_{b}"
                              for a, b in itertools.combinations(range(1, n + 1), 2)]
        elif out == "residual":
            cols += ["residual"]
        elif out == "witnesses":
            cols += ["witness_ghz", "witness_w3"]
    return cols


def _scenario_configuration(spec: ScenarioSpec, v: float) -> Configuration:
    if spec.kind == "line":
        return line_configuration(spec.x_max, v)
    if spec.kind == "isosceles":
        return isosceles_configuration(spec.base, v)
    if spec.kind in ("simplex", "entropy"):
        return regular_simplex_configuration(spec.n, v)
    return Configuration(spec.positions).scaled(v)


def _scenario_row(spec: ScenarioSpec, config: Configuration) -> dict:
    n = spec.n
    rho = spin_density_matrix(exchange_matrix(config))
    cells: dict = {}
    for out in spec.outputs:
        if out == "negativity":
            for p in single_fermion_bipartitions(n):
                cells[bipartition_label(p, n)] = negativity(rho, p)
        elif out == "entropy":
            nats = von_neumann_entropy(rho)
            cells[f"S{n}_bits"] = nats / math.log(2.0)
            cells[f"S{n}_nats"] = nats
        elif out in ("weights", "residual"):
            fitted = fit_weights(rho)
            if out == "weights":
                cells["w0"] = fitted.w0
                for (a, b), w in fitted.w.items():
                    cells[f"w_{a}_{b}"] = w
            else:
                cells["residual"] = fitted.residual
        elif out == "witnesses":
            cells["witness_ghz"] = witness_expectation(rho, "ghz")
            cells["witness_w3"] = witness_expectation(rho, "w3")
    return cells


def run_scenario(spec: ScenarioSpec) -> SweepResult:
    """Execute one scenario sweep.

    For kind=custom the grid value is a scale factor applied to the given
    positions, so a two-point template [[0,0,0],[1,0,0]] swept over [0, 6]
    scans pair separations directly.
    """
    columns = _scenario_columns(spec)
    metadata = {
        "tool": "fermigas", "version": __version__,
        "scenario": {
            "kind": spec.kind, "n": spec.n,
            "grid": {"start": spec.grid.start, "stop": spec.grid.stop,
                     "points": spec.grid.points},
            "outputs": list(spec.outputs), "seed": spec.seed,
            "x_max": spec.x_max, "base": spec.base,
            "positions": None if spec.positions is None
                         else np.asarray(spec.positions).tolist(),
        },
        "analysis": {"threshold_x_star": pair_entanglement_threshold()},
    }
    return _sweep(spec.grid_name, spec.grid.values(), columns,
                  lambda v: _scenario_row(spec, _scenario_configuration(spec, v)),
                  metadata)


# -- figure datasets ---------------------------------------------------------

FIGURE_DEFAULTS = {
    1: {"grid": 101, "xmax": 5.0, "base": 1.0, "eps": 1e-2},
    2: {"grid": 81, "xmax": 8.0, "base": 1.0, "eps": 1e-2},
    3: {"grid": 121, "xmax": 6.0, "base": 1.0, "eps": 1e-2},
    4: {"grid": 121, "xmax": 6.0, "base": 1.0, "eps": 1e-2},
}


def run_figure(figure: int, grid: int | None = None, xmax: float | None = None,
               base: float | None = None, eps: float | None = None) -> SweepResult:
    """Dataset behind one of the four standard figures.

    1: three fermions on a line (1 and 3 fixed xmax apart), N_2_13 against
       the position x of fermion 2.
    2: isosceles triangle with fixed base, N_1_23 and N_2_13 against the
       apex height (xmax is the largest height).
    3: regular-simplex negativities N_1_2, N_1_23, N_1_234 against the
       edge length on [eps, xmax].
    4: regular-simplex entropies S2, S3, S4 in bits against the edge on
       {0} + [eps, xmax]; at edge 0 only S2 exists (three or more
       coincident fermions are degenerate), so that row is flagged.
    """
    if figure not in FIGURE_DEFAULTS:
        raise ScenarioError(f"figure must be 1..4, got {figure}")
    d = FIGURE_DEFAULTS[figure]
    grid = int(d["grid"] if grid is None else grid)
    xmax = float(d["xmax"] if xmax is None else xmax)
    base = float(d["base"] if base is None else base)
    eps = float(d["eps"] if eps is None else eps)
    if grid < 2:
        raise ScenarioError("grid must be at least 2")
    if xmax <= 0 or base <= 0 or eps <= 0:
        raise ScenarioError("xmax, base and eps must be positive")
    if figure in (3, 4) and eps >= xmax:
        raise ScenarioError("eps must be smaller than xmax")

    metadata = {
        "tool": "fermigas", "version": __version__, "figure": figure,
        "parameters": {"grid": grid, "xmax": xmax, "base": base, "eps": eps},
        "analysis": {"threshold_x_star": pair_entanglement_threshold()},
    }

    if figure == 1:
        def row(x):
            rho = spin_density_matrix(exchange_matrix(line_configuration(xmax, x)))
            return {"N_2_13": negativity(rho, (2,))}
        return _sweep("x", np.linspace(0.0, xmax, grid), ["N_2_13"], row, metadata)

    if figure == 2:
        metadata["analysis"]["saturation_negativity"] = two_fermion_negativity(base)

        def row(h):
            rho = spin_density_matrix(
                exchange_matrix(isosceles_configuration(base, h)))
            return {"N_1_23": negativity(rho, (1,)),
                    "N_2_13": negativity(rho, (2,))}
        return _sweep("height", np.linspace(0.0, xmax, grid),
                      ["N_1_23", "N_2_13"], row, metadata)

    if figure == 3:
        metadata["analysis"]["eq1_residual_study"] = residual_study()

        def row(edge):
            cells = {}
            for n, col in ((2, "N_1_2"), (3, "N_1_23"), (4, "N_1_234")):
                try:
                    rho = spin_density_matrix(
                        exchange_matrix(regular_simplex_configuration(n, edge)))
                    cells[col] = negativity(rho, (1,))
                except DegenerateConfiguration:
                    cells[col] = None
            return cells
        return _sweep("edge", np.linspace(eps, xmax, grid),
                      ["N_1_2", "N_1_23", "N_1_234"], row, metadata)

    # figure 4
    metadata["analysis"]["coincident_entropies"] = coincident_entropy_report(eps)

    def row(edge):
        cells = {}
        for n in (2, 3, 4):
            try:
                rho = spin_density_matrix(
                    exchange_matrix(regular_simplex_configuration(n, edge)))
                cells[f"S{n}_bits"] = von_neumann_entropy(rho, base=2.0)
            except DegenerateConfiguration:
                cells[f"S{n}_bits"] = None
        return cells
    edges = np.concatenate(([0.0], np.linspace(eps, xmax, grid - 1)))
    return _sweep("edge", edges, ["S2_bits", "S3_bits", "S4_bits"], row, metadata)


def residual_study(n: int = 4, samples: int = 100, box: float = 6.0,
                   seed: int = 20260810) -> dict:
    """Reconstruction residual of the pair-singlet fit over random geometries.

    Answers how far the identity-plus-pair-singlet form is from exact at
    the given n; for n = 2 and 3 the residuals sit at roundoff, for n = 4
    they do not.
    """
    residuals = []
    for k in range(samples):
        config = random_configuration(n, box, seed + k)
        rho = spin_density_matrix(exchange_matrix(config))
        residuals.append(fit_weights(rho).residual)
    arr = np.array(residuals)
    return {
        "n": n, "samples": samples, "box": box, "seed": seed,
        "residual_min": float(arr.min()),
        "residual_mean": float(arr.mean()),
        "residual_max": float(arr.max()),
        "residuals": [float(r) for r in arr],
    }


def coincident_entropy_report(eps: float = 1e-2) -> dict:
    """Near-coincidence entropies against both analytic candidates.

    S2 is evaluated at exactly zero separation (a coincident pair is the
    pure singlet); S3 and S4 at edge eps. Distances are reported to the
    non-symmetric-state-counting value log2(2^n - (n+1)) and, for n = 4,
    to the equal pair-singlet mixture.
    """
    out: dict = {"eps": eps}
    s2 = von_neumann_entropy(spin_density_matrix(
        exchange_matrix(regular_simplex_configuration(2, 0.0))), base=2.0)
    out["S2_bits_at_zero"] = s2
    for n in (3, 4):
        s = von_neumann_entropy(spin_density_matrix(
            exchange_matrix(regular_simplex_configuration(n, eps))), base=2.0)
        out[f"S{n}_bits_at_eps"] = s
        out[f"S{n}_counting_bits"] = coincident_entropy_bound(n, base=2.0)
        out[f"S{n}_distance_to_counting_bits"] = abs(
            s - out[f"S{n}_counting_bits"])
    out["S4_equal_pair_mixture_bits"] = EQUAL_PAIR_MIXTURE_N4_BITS
    out["S4_distance_to_equal_pair_mixture_bits"] = abs(
        out["S4_bits_at_eps"] - EQUAL_PAIR_MIXTURE_N4_BITS)
    return out


# -- scenario files and single-configuration reports -------------------------

def load_scenario(path) -> ScenarioSpec:
    """Parse and validate a scenario JSON file."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScenarioError(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                f"{exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ScenarioError(f"{path}: top level must be a JSON object")
    return scenario_from_dict(raw, source=str(path))


def scenario_from_dict(raw: dict, source: str = "<dict>") -> ScenarioSpec:
    known = {"kind", "n", "grid", "positions", "seed", "outputs", "x_max", "base"}
    unknown = set(raw) - known
    if unknown:
        raise ScenarioError(f"{source}: unknown fields {sorted(unknown)}")
    if "kind" not in raw:
        raise ScenarioError(f"{source}: missing field 'kind'")
    if "grid" not in raw:
        raise ScenarioError(f"{source}: missing field 'grid'")
    g = raw["grid"]
    if not isinstance(g, dict) or not {"start", "stop", "points"} <= set(g):
        raise ScenarioError(
            f"{source}: grid must be an object with start, stop, points")
    try:
        grid = GridSpec(float(g["start"]), float(g["stop"]), int(g["points"]))
        return ScenarioSpec(
            kind=raw["kind"], grid=grid,
            n=None if raw.get("n") is None else int(raw["n"]),
            positions=raw.get("positions"),
            seed=None if raw.get("seed") is None else int(raw["seed"]),
            outputs=tuple(raw.get("outputs") or ()),
            x_max=float(raw.get("x_max", 5.0)),
            base=float(raw.get("base", 1.0)),
        )
    except ScenarioError as exc:
        raise ScenarioError(f"{source}: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{source}: {exc}") from exc


def analyze_configuration(raw: dict, source: str = "<dict>") -> dict:
    """JSON-ready entanglement report for a single configuration.

    The description needs either kind=custom with positions, or one of
    the parametric kinds with its scalar: line (x_max, x), isosceles
    (base, height), simplex (n, edge).
    """
    known = {"kind", "n", "positions", "x_max", "x", "base", "height", "edge"}
    unknown = set(raw) - known
    if unknown:
        raise ScenarioError(f"{source}: unknown fields {sorted(unknown)}")
    kind = raw.get("kind", "custom")
    try:
        if kind == "custom":
            if "positions" not in raw:
                raise ScenarioError("kind=custom requires field positions")
            config = Configuration(np.array(raw["positions"], dtype=float))
        elif kind == "line":
            config = line_configuration(float(raw.get("x_max", 5.0)),
                                        float(raw["x"]))
        elif kind == "isosceles":
            config = isosceles_configuration(float(raw.get("base", 1.0)),
                                             float(raw["height"]))
        elif kind == "simplex":
            config = regular_simplex_configuration(int(raw["n"]),
                                                   float(raw["edge"]))
        else:
            raise ScenarioError(
                f"kind must be custom, line, isosceles or simplex, got {kind!r}")
    except KeyError as exc:
        raise ScenarioError(f"{source}: missing field {exc.args[0]!r}") from exc
    except ScenarioError as exc:
        raise ScenarioError(f"{source}: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{source}: {exc}") from exc

    rho = spin_density_matrix(exchange_matrix(config))
    rep = entanglement_report(rho)
    fitted = fit_weights(rho)
    n = config.n
    out = {
        "n": n,
        "positions": config.positions.tolist(),
        "negativities": {bipartition_label(p, n): v
                         for p, v in rep.negativities.items()},
        "negative_eigenvalues": {bipartition_label(p, n): list(v)
                                 for p, v in rep.negative_eigenvalues.items()},
        "ppt": {bipartition_label(p, n): bool(v)
                for p, v in rep.ppt_flags.items()},
        "entropy_bits": rep.entropy_bits,
        "entropy_nats": rep.entropy_nats,
        "weights": {"w0": fitted.w0,
                    **{f"w_{a}_{b}": w for (a, b), w in fitted.w.items()}},
        "fit_residual": fitted.residual,
        "metadata": {"tool": "fermigas", "version": __version__},
    }
    if n == 3:
        out["witness_ghz"] = rep.witness_ghz
        out["witness_w3"] = rep.witness_w3
    return out
