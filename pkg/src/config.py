"""Centralized configuration module for managing constants used across the project.

These configurations aim to improve modularity and readability by consolidating settings
into a single location.
"""

from __future__ import annotations

import os
from argparse import ArgumentParser, Namespace
from collections import deque
from dataclasses import dataclass, field
from typing import NoReturn

from .exceptions import ValidationError

# ============================
# Paths and Files
# ============================
SESSION_LOG = "session_log.txt"  # The file used to log session errors.

# ============================
# Exit Codes
# ============================
EXIT_OK = 0          # Successful run.
EXIT_INTERRUPTED = 1  # Interrupted by the user.
EXIT_VALIDATION = 2  # Invalid parameters (argparse uses the same code).
EXIT_BUDGET = 3      # A computation was refused because of its budget.
EXIT_INTERNAL = 4    # An internal consistency check failed.

# ============================
# Computation Budgets
# ============================
FIELD_MAX_DEGREE = 64           # Largest supported extension degree over GF(2).
EMBED_MAX_SUBFIELD_DEGREE = 24  # Largest subfield scanned for a modulus root.
POINT_BUDGET = 2**32            # Largest q^i scanned by point counting.
MATERIALIZE_BUDGET = 2**24      # Largest q^i for which points are materialized.
MATRIX_CELL_BUDGET = 2**26      # Largest k*N generator matrix built in memory.
DISTANCE_BUDGET = 2**24         # Default codeword budget for exhaustive distance.

# Environment variable overriding the default exhaustive-distance budget.
DISTANCE_BUDGET_ENV = "SUZUKI_DISTANCE_BUDGET"

# ============================
# Parallelism
# ============================
MAX_WORKERS = 4           # Default number of worker threads.
POINT_CHUNK_SIZE = 2**14  # Number of x-values handled per enumeration chunk.
MESSAGE_CHUNK_SIZE = 2**12  # Number of messages encoded per distance chunk.

# ============================
# Output
# ============================
OUTPUT_FORMATS = ("json", "csv")
JSON_INDENT = 2

POINT_CSV_COLUMNS = ("x", "y")
QUANTUM_CSV_COLUMNS = (
    "n", "k", "d_lower", "construction", "a", "b", "delta_q_upper",
)

# ============================
# UI & Table Settings
# ============================
BUFFER_SIZE = 5                   # Maximum number of items showed in buffers.
PROGRESS_COLUMNS_SEPARATOR = "•"  # Visual separator used between progress bar columns.

# Colors used for the progress manager UI elements
PROGRESS_MANAGER_COLORS = {
    "title_color": "light_cyan3",           # Title color for progress panels.
    "overall_border_color": "bright_blue",  # Border color for overall progress panel.
    "task_border_color": "medium_purple",   # Border color for task progress panel.
}

# Setting used for the log manager UI elements
LOG_MANAGER_CONFIG = {
    "colors": {
        "title_color": "light_cyan3",  # Title color for log panel.
        "border_color": "cyan",        # Border color for log panel.
    },
    "min_column_widths": {
        "Timestamp": 10,
        "Event": 15,
        "Details": 30,
    },
    "column_styles": {
        "Timestamp": "pale_turquoise4",
        "Event": "pale_turquoise1",
        "Details": "pale_turquoise4",
    },
}


def default_distance_budget() -> int:
    """Return the exhaustive-distance budget, honouring the environment override."""
    raw = os.environ.get(DISTANCE_BUDGET_ENV)
    if raw is None or not raw.strip():
        return DISTANCE_BUDGET

    try:
        budget = int(raw, 0)
    except ValueError as exc:
        message = f"{DISTANCE_BUDGET_ENV} must be an integer, got {raw!r}"
        raise ValidationError(message, f"{DISTANCE_BUDGET_ENV} is an integer") from exc

    if budget < 1:
        message = f"{DISTANCE_BUDGET_ENV} must be positive, got {budget}"
        raise ValidationError(message, f"{DISTANCE_BUDGET_ENV} >= 1")

    return budget


# ============================
# Data Classes
# ============================
@dataclass
class ProgressConfig:
    """Configuration for progress bar settings."""

    task_name: str
    item_description: str
    color: str = PROGRESS_MANAGER_COLORS["title_color"]
    panel_width = 40
    overall_buffer: deque = field(default_factory=lambda: deque(maxlen=BUFFER_SIZE))


@dataclass
class RunConfig:
    """Validated settings of a single command-line run."""

    subcommand: str
    s: int = 3
    h: int = 1
    ext: int = 1
    r: int | None = None
    ell: int | None = None
    a: int | None = None
    b: int | None = None
    construction: str | None = None
    output_format: str = "json"
    output: str | None = None
    matrix_path: str | None = None
    budget: int | None = None
    threads: int = MAX_WORKERS
    count_only: bool = False
    best: bool = False
    quiet: bool = False

    @classmethod
    def from_namespace(cls, args: Namespace) -> RunConfig:
        """Build the configuration from parsed arguments and validate it."""
        config = cls(
            subcommand=args.subcommand,
            s=args.s,
            h=args.h,
            ext=getattr(args, "ext", 1),
            r=getattr(args, "r", None),
            ell=getattr(args, "ell", None),
            a=getattr(args, "a", None),
            b=getattr(args, "b", None),
            construction=getattr(args, "construction", None),
            output_format=args.format,
            output=args.output,
            matrix_path=getattr(args, "matrix", None),
            budget=getattr(args, "budget", None),
            threads=args.threads,
            count_only=getattr(args, "count_only", False),
            best=getattr(args, "best", False),
            quiet=args.quiet,
        )
        config.validate()
        return config

    def validate(self) -> None:
        """Check the cross-field constraints argparse cannot express."""
        if self.ext < 1:
            message = f"extension degree must be positive, got {self.ext}"
            raise ValidationError(message, "ext >= 1")

        if self.threads < 1:
            message = f"thread count must be positive, got {self.threads}"
            raise ValidationError(message, "threads >= 1")

        if self.budget is not None and self.budget < 1:
            message = f"budget must be positive, got {self.budget}"
            raise ValidationError(message, "budget >= 1")

        if (self.a is None) != (self.b is None):
            message = "--a and --b must be given together"
            raise ValidationError(message, "both or neither of --a, --b")


# ============================
# Argument Parsing
# ============================
# Constraint reported for each kind of argparse usage error.
USAGE_CONSTRAINTS = (
    ("the following arguments are required", "required arguments are given"),
    ("invalid choice", "value is one of the listed choices"),
    ("invalid int value", "value is an integer"),
    ("unrecognized arguments", "only documented arguments"),
    ("expected one argument", "option is followed by a value"),
)


class CommandLineParser(ArgumentParser):
    """Argument parser that raises ValidationError instead of printing the usage."""

    def error(self, message: str) -> NoReturn:
        """Turn a usage error into a ValidationError naming the broken constraint."""
        constraint = next(
            (text for fragment, text in USAGE_CONSTRAINTS if fragment in message),
            "valid command-line usage",
        )
        raise ValidationError(message, constraint)


def add_common_arguments(parser: ArgumentParser) -> None:
    """Add arguments shared across subcommands."""
    parser.add_argument(
        "--s", type=int, default=3, help="Exponent s of q = 2^s (default: 3).",
    )
    parser.add_argument(
        "--h", type=int, default=1, help="Exponent h of q0 = 2^h (default: 1).",
    )
    parser.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default="json",
        help="Output format of the emitted artifact (default: json).",
    )
    parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="File where the artifact is written (default: standard output).",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=MAX_WORKERS,
        help=f"Maximum number of worker threads (default: {MAX_WORKERS}).",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="Disable the live progress display.",
    )


def add_extension_argument(parser: ArgumentParser) -> None:
    """Add the extension degree i of the evaluation field F_{q^i}."""
    parser.add_argument(
        "--ext",
        type=int,
        default=1,
        help="Extension degree i of the field F_{q^i} (default: 1).",
    )


def add_quantum_arguments(parser: ArgumentParser) -> None:
    """Add the arguments of the quantum parameter sweeps."""
    parser.add_argument(
        "--a",
        type=int,
        default=None,
        help="Single-row mode: a (t-point) or a_idx (css).",
    )
    parser.add_argument(
        "--b",
        type=int,
        default=None,
        help="Single-row mode: b (t-point) or b_gap (css).",
    )
    parser.add_argument(
        "--best",
        action="store_true",
        help="Keep only the largest d_lower for every dimension k.",
    )


def setup_parser() -> CommandLineParser:
    """Set up the parser with one subparser per computation.

    Subparsers inherit the parser class, so their usage errors raise too.
    """
    parser = CommandLineParser(
        description=(
            "Generalized Suzuki curve X^q0 (X^q + X) = Y^q + Y: semigroup, "
            "Castle property, one-point AG codes and quantum parameters."
        ),
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    curve_parser = subparsers.add_parser(
        "curve", help="Curve parameters, genus and Castle report.",
    )
    add_extension_argument(curve_parser)

    points_parser = subparsers.add_parser(
        "points", help="Rational points over F_{q^i}.",
    )
    add_extension_argument(points_parser)
    points_parser.add_argument(
        "--count-only",
        action="store_true",
        help="Only count the points, without materializing them.",
    )

    subparsers.add_parser(
        "semigroup", help="Weierstrass semigroup at the point at infinity.",
    )

    fengrao_parser = subparsers.add_parser(
        "fengrao", help="Feng-Rao function and order bound.",
    )
    fengrao_parser.add_argument("--ell", type=int, required=True, help="Index ell.")

    code_parser = subparsers.add_parser("code", help="One-point code C(D, rP).")
    add_extension_argument(code_parser)
    code_parser.add_argument("--r", type=int, required=True, help="Pole-order cap r.")
    code_parser.add_argument(
        "--matrix",
        type=str,
        default=None,
        help="File where the generator matrix is exported.",
    )

    dual_parser = subparsers.add_parser("dual", help="Castle duality check.")
    dual_parser.add_argument("--r", type=int, required=True, help="Pole-order cap r.")

    distance_parser = subparsers.add_parser(
        "distance", help="Exhaustive minimum distance of C(D, rP).",
    )
    add_extension_argument(distance_parser)
    distance_parser.add_argument(
        "--r", type=int, required=True, help="Pole-order cap r.",
    )
    distance_parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"Codeword budget (default: ${DISTANCE_BUDGET_ENV} or {DISTANCE_BUDGET}).",
    )

    quantum_parser = subparsers.add_parser(
        "quantum", help="Quantum code parameter tables.",
    )
    quantum_parser.add_argument(
        "construction",
        choices=("css", "tpoint"),
        help="CSS with the order bound, or the general t-point construction.",
    )
    add_quantum_arguments(quantum_parser)

    for subparser in subparsers.choices.values():
        add_common_arguments(subparser)

    return parser


def parse_arguments(argv: list[str] | None = None) -> Namespace:
    """Parse the command line into a Namespace."""
    parser = setup_parser()
    return parser.parse_args(argv)
