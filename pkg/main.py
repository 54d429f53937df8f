"""Main module of the project.

This module runs one computation on the generalized Suzuki curve from the command line
and emits its artifact (JSON or CSV) on standard output or to a file.

Usage:
    python3 main.py <subcommand> [options]

    Subcommands: curve, points, semigroup, fengrao, code, dual, distance, quantum.
    Run `python3 main.py <subcommand> --help` for the options of each one.

Exit codes:
    0 on success, 1 when interrupted, 2 on invalid parameters, 3 when a computation
    exceeds its budget, 4 when an internal consistency check fails. Every error is
    reported as a single `error kind=... constraint="..." reason="..."` line on
    standard error and appended to the session log.
"""

from __future__ import annotations

import logging
import sys

from explorer import Explorer
from src.config import (
    EXIT_BUDGET,
    EXIT_INTERNAL,
    EXIT_INTERRUPTED,
    EXIT_OK,
    EXIT_VALIDATION,
    SESSION_LOG,
    RunConfig,
    parse_arguments,
)
from src.exceptions import BudgetExceededError, SuzukiError, ValidationError
from src.file_utils import emit, write_file, write_on_session_log
from src.managers.live_manager import initialize_managers


def configure_logging() -> None:
    """Send warnings and errors to standard error as bare messages."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(logging.WARNING)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logging.basicConfig(level=logging.INFO, handlers=[handler])


def report_error(error: SuzukiError, exit_code: int) -> int:
    """Log the one-line rendering of an error and return the exit code."""
    line = error.one_line()
    logging.error(line)
    write_on_session_log(line)
    return exit_code


def run(argv: list[str] | None = None) -> int:
    """Parse the arguments, run the computation and emit the artifact."""
    configure_logging()

    # Clear the session log
    write_file(SESSION_LOG)

    try:
        config = RunConfig.from_namespace(parse_arguments(argv))
        live_manager = initialize_managers(quiet=config.quiet)
        with live_manager:
            artifact = Explorer(config, live_manager).run()
        emit(artifact.render(config.output_format), config.output)

    except SystemExit as exc:
        # Only --help exits through argparse
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    except KeyboardInterrupt:
        return EXIT_INTERRUPTED

    except ValidationError as error:
        return report_error(error, EXIT_VALIDATION)

    except BudgetExceededError as error:
        return report_error(error, EXIT_BUDGET)

    except SuzukiError as error:
        return report_error(error, EXIT_INTERNAL)

    except Exception as exc:  # noqa: BLE001
        reason = f"{type(exc).__name__}: {exc}"
        return report_error(SuzukiError(reason, "no unexpected error"), EXIT_INTERNAL)

    return EXIT_OK


def main() -> None:
    """Run the script."""
    sys.exit(run())


if __name__ == "__main__":
    main()
