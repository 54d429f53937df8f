"""Explorer module dispatching one computation on the generalized Suzuki curve.

Example usage:
    python3 main.py curve --s 3 --h 1
    python3 main.py points --s 5 --h 1 --ext 3 --count-only
    python3 main.py quantum tpoint --s 3 --h 1 --a 40 --b 50
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from src.agcode import (
    check_duality,
    code_dimension,
    code_spec_make,
    designed_distance,
    export_matrix,
    gen_matrix,
    min_distance_exhaustive,
)
from src.config import POINT_CSV_COLUMNS, QUANTUM_CSV_COLUMNS
from src.curve import (
    PointStatistics,
    castle_check,
    count_points,
    local_parameter_valuation,
    params_make,
    points,
    weak_castle_witness,
)
from src.file_utils import render_csv, render_json
from src.quantum import (
    Construction,
    SweepRanges,
    best_per_dimension,
    css_params,
    quantum_table,
    singleton_report,
    t_point_params,
)
from src.semigroup import curve_semigroup, explicit_apery_set

if TYPE_CHECKING:
    from src.config import RunConfig
    from src.managers.live_manager import LiveManager

# Number of progress stages reported by each subcommand.
STAGE_COUNTS = {
    "curve": 1,
    "points": 1,
    "distance": 1,
    "quantum": 1,
}


@dataclass
class Artifact:
    """What a run emits: a JSON document, and a table for CSV output."""

    document: dict
    columns: tuple[str, ...] | None = None
    rows: list | None = None

    def render(self, output_format: str) -> str:
        """Render as JSON, or as CSV (a key/value table when there are no rows)."""
        if output_format == "json":
            return render_json(self.document)

        if self.rows is not None:
            return render_csv(self.columns, self.rows)

        rows = [
            (key, _csv_cell(value)) for key, value in sorted(self.document.items())
        ]
        return render_csv(("key", "value"), rows)


def _csv_cell(value: object) -> object:
    """Nested values go into a single cell as compact JSON."""
    if isinstance(value, dict | list):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return value


class Explorer:
    """Class running a single subcommand and collecting its artifact.

    Long stages report their progress to the live manager; everything that ends up in
    the artifact is deterministic.
    """

    def __init__(self, config: RunConfig, live_manager: LiveManager) -> None:
        """Validate the curve parameters and keep the run settings."""
        self.config = config
        self.live_manager = live_manager
        self.params = params_make(config.s, config.h)
        self.max_workers = config.threads

    def run(self) -> Artifact:
        """Dispatch the configured subcommand."""
        handlers = {
            "curve": self.describe_curve,
            "points": self.list_points,
            "semigroup": self.describe_semigroup,
            "fengrao": self.evaluate_feng_rao,
            "code": self.build_code,
            "dual": self.check_dual,
            "distance": self.exhaustive_distance,
            "quantum": self.quantum_parameters,
        }
        subcommand = self.config.subcommand
        self.live_manager.add_overall_task(
            description=f"{subcommand} q={self.params.q}",
            num_tasks=STAGE_COUNTS.get(subcommand, 0),
        )
        return handlers[subcommand]()

    def describe_curve(self) -> Artifact:
        """Parameters, genus, Castle and weak Castle reports."""
        ext = self.config.ext
        report = castle_check(
            self.params,
            ext,
            self.max_workers,
            self.live_manager.stage_hook("counting points"),
        )
        statistics = PointStatistics(self.params, ext, report.rational_points)

        return Artifact({
            **self.params.to_dict(),
            "castle": report.castle,
            "castle_report": report.to_dict(),
            "weak_castle": weak_castle_witness(self.params, ext).to_dict(),
            "point_statistics": statistics.to_dict(),
            "local_parameter_valuation": local_parameter_valuation(self.params),
        })

    def list_points(self) -> Artifact:
        """N_i, and the affine points unless only the count is requested."""
        ext = self.config.ext
        hook = self.live_manager.stage_hook(f"points over F_q^{ext}")
        header = {"params": self.params.to_dict(), "ext_degree": ext}

        if self.config.count_only:
            count = count_points(self.params, ext, self.max_workers, hook)
            statistics = PointStatistics(self.params, ext, count)
            return Artifact({
                **header,
                "count": count,
                "point_statistics": statistics.to_dict(),
            })

        point_set = points(self.params, ext, self.max_workers, hook)
        rows = list(point_set.hex_rows())
        self.live_manager.update_log(
            "Points enumerated", f"{len(rows)} affine points over F_q^{ext}",
        )
        return Artifact(
            {
                **header,
                "count": point_set.count_with_infinity,
                "points": [list(row) for row in rows],
            },
            columns=POINT_CSV_COLUMNS,
            rows=rows,
        )

    def describe_semigroup(self) -> Artifact:
        """Generators, genus, conductor, Apéry set and symmetry."""
        semigroup = curve_semigroup(self.params)
        apery = semigroup.apery_set(self.params.q)
        return Artifact({
            "params": self.params.to_dict(),
            **semigroup.to_dict(),
            "apery_matches_closed_form": (
                set(apery.elements) == explicit_apery_set(self.params)
            ),
        })

    def evaluate_feng_rao(self) -> Artifact:
        """Feng-Rao function and order bound at index ell."""
        semigroup = curve_semigroup(self.params)
        ell = self.config.ell
        return Artifact({
            "params": self.params.to_dict(),
            "ell": ell,
            "rho_next": semigroup.rho(ell + 1),
            "nu": semigroup.feng_rao_nu(ell),
            "order_bound": semigroup.order_bound(ell),
        })

    def build_code(self) -> Artifact:
        """Basis, dimension and designed distance; optionally export the matrix."""
        spec = code_spec_make(self.params, self.config.r, self.config.ext)
        generator = gen_matrix(spec, self.max_workers)

        if self.config.matrix_path is not None:
            export_matrix(generator, self.config.matrix_path)
            self.live_manager.update_log(
                "Matrix exported", f"{generator.k} x {generator.n} to "
                f"{self.config.matrix_path}",
            )

        return Artifact({
            **generator.to_dict(),
            "code_dimension": code_dimension(self.params, spec.r, spec.ext_degree),
        })

    def check_dual(self) -> Artifact:
        """Castle duality report."""
        report = check_duality(self.params, self.config.r, self.max_workers)
        return Artifact({"params": self.params.to_dict(), **report.to_dict()})

    def exhaustive_distance(self) -> Artifact:
        """Exact minimum distance within the codeword budget."""
        spec = code_spec_make(self.params, self.config.r, self.config.ext)
        generator = gen_matrix(spec, self.max_workers)
        distance = min_distance_exhaustive(
            generator,
            self.config.budget,
            self.max_workers,
            self.live_manager.stage_hook("scanning codewords"),
        )
        designed = designed_distance(spec)
        if distance < designed:
            logging.warning("d = %d is below d* = %d", distance, designed)

        return Artifact({
            **spec.to_dict(),
            "k": generator.k,
            "min_distance": distance,
            "designed_distance": designed,
            "goppa_bound_holds": distance >= designed,
        })

    def quantum_parameters(self) -> Artifact:
        """A quantum parameter table, or a single row when --a and --b are given."""
        construction = Construction.from_cli(self.config.construction)
        a, b = self.config.a, self.config.b

        if a is not None:
            build = (
                t_point_params if construction is Construction.T_POINT else css_params
            )
            row = build(self.params, a, b)
            singleton_report(row)
            table = [row]
        else:
            table = quantum_table(
                self.params,
                construction,
                SweepRanges(),
                self.max_workers,
                self.live_manager.stage_hook(f"{construction.value} sweep"),
            )

        if self.config.best:
            table = best_per_dimension(table)

        return Artifact(
            {
                "params": self.params.to_dict(),
                "construction": construction.value,
                "rows": [row.to_dict() for row in table],
            },
            columns=QUANTUM_CSV_COLUMNS,
            rows=[row.to_row() for row in table],
        )
