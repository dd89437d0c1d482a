"""
Command-line entry point: ``weyl-gradings``.

Subcommands build algebras and gradings into a workspace, run the Weyl group
pipeline, run the named verification checks, and move JSON artifacts in and
out of the workspace.

Exit codes: 0 on success, 1 on a logical failure (mismatch, failed check,
unknown object, invalid input) and 2 when a configured bound is exceeded.
Errors are reported on stderr as a single JSON object.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .checks import SUITES, first_failure, format_rows, run_checks
from .config import configure, get_settings
from .core.base import canonical_json
from .exceptions import BoundExceededError, WeylGradingsError
from .gradings.builtin import GRADING_NAMES, builtin_grading
from .weyl.pipeline import weyl_group
from .workspace import ALGEBRA_NAMES, Workspace, builtin_algebra

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BOUND = 2


def _moduli(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weyl-gradings",
        description="Build fine gradings and verify their Weyl groups with exact arithmetic",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--workspace", help="Workspace directory (default from settings)")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--log-level", help="Logging level (default from settings)")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="Build and store a builtin algebra or grading")
    build.add_argument("kind", choices=["algebra", "grading"])
    build.add_argument("name", help=f"Algebra ({', '.join(ALGEBRA_NAMES)}) or grading name")
    build.add_argument("--l", type=_moduli, default=None, help="Pauli moduli, e.g. 2,2")
    build.add_argument("--k", type=int, default=None, help="Matrix size k for gamma_M / matrix")

    weyl = sub.add_parser("weyl", help="Compute and cross-check the Weyl group of a grading")
    weyl.add_argument("grading", help=f"One of {', '.join(GRADING_NAMES)}")
    weyl.add_argument("--mode", default=None, help="full or sampled:<n>")
    weyl.add_argument("--jobs", type=int, default=None, help="Worker processes")
    weyl.add_argument("--out", default=None, help="Report path (default: workspace reports/)")
    weyl.add_argument("--l", type=_moduli, default=None, help="Pauli moduli for gamma_M")
    weyl.add_argument("--k", type=int, default=None, help="Matrix size k for gamma_M")

    verify = sub.add_parser("verify", help="Run the named structural checks")
    verify.add_argument("--suite", default="all", choices=("all",) + SUITES)
    verify.add_argument("--tsv", action="store_true", help="Print the summary as TSV")

    export = sub.add_parser("export", help="Write a stored object to a file")
    export.add_argument("kind", choices=["algebra", "grading", "automorphism", "report"])
    export.add_argument("name")
    export.add_argument("--out", required=True)

    imp = sub.add_parser("import", help="Validate a JSON file and store it")
    imp.add_argument("path")

    show = sub.add_parser("show", help="Print a stored object in text form")
    show.add_argument("kind", choices=["algebra", "grading", "report"])
    show.add_argument("name")
    return parser


def _params(args: argparse.Namespace, pauli_key: str) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    if args.l is not None:
        params[pauli_key] = tuple(args.l)
    if args.k is not None:
        params["k"] = args.k
    return params


def _emit_error(error: Exception, code: int) -> int:
    payload: Dict[str, Any] = {
        "error": type(error).__name__,
        "message": str(error),
        "exit_code": code,
    }
    if isinstance(error, BoundExceededError):
        payload.update(
            bound_name=error.bound_name, bound=error.bound, partial_count=error.partial_count
        )
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    return code


# ── Commands ─────────────────────────────────────────────────────────


def cmd_build(args: argparse.Namespace, workspace: Workspace) -> int:
    if args.kind == "algebra":
        algebra = builtin_algebra(args.name, **_params(args, "l"))
        algebra.validate()
        path = workspace.save_algebra(algebra)
        print(json.dumps({"algebra": algebra.name, "dim": algebra.dim, "path": str(path)}))
        return EXIT_OK
    grading = builtin_grading(args.name, **_params(args, "moduli"))
    path = workspace.save_grading(grading)
    print(json.dumps({"grading": grading.name, "group": str(grading.group), "path": str(path)}))
    return EXIT_OK


def cmd_weyl(args: argparse.Namespace, workspace: Workspace) -> int:
    params = _params(args, "moduli")
    stored = args.grading not in GRADING_NAMES and workspace.exists("grading", args.grading)
    if not params and stored:
        grading: Any = workspace.load_grading(args.grading)
    else:
        grading = args.grading
    report = weyl_group(grading, mode=args.mode, jobs=args.jobs, **params)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(canonical_json(report.model_dump()) + "\n")
    else:
        out = workspace.save_report(report)
    summary = {
        "grading": report.grading,
        "lower_order": report.lower_order,
        "upper_order": report.upper_order,
        "matched": report.matched,
        "failed_checks": report.failed_checks(),
        "report": str(out),
    }
    if "pass_rate" in report.metadata:
        summary["pass_rate"] = report.metadata["pass_rate"]
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_verify(args: argparse.Namespace, workspace: Workspace) -> int:
    rows = run_checks(args.suite)
    print(format_rows(rows, tsv=args.tsv))
    failed = first_failure(rows)
    if failed is not None:
        print(f"first failing check: {failed.name}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_export(args: argparse.Namespace, workspace: Workspace) -> int:
    path = workspace.export(args.kind, args.name, args.out)
    print(json.dumps({"exported": args.name, "path": str(path)}))
    return EXIT_OK


def cmd_import(args: argparse.Namespace, workspace: Workspace) -> int:
    path = workspace.import_file(args.path)
    print(json.dumps({"imported": str(args.path), "path": str(path)}))
    return EXIT_OK


def cmd_show(args: argparse.Namespace, workspace: Workspace) -> int:
    if args.kind == "grading":
        grading = workspace.load_grading(args.name)
        sys.stdout.write(grading.support().to_text(grading.algebra.labels))
    elif args.kind == "algebra":
        algebra = workspace.load_algebra(args.name)
        print(f"{algebra.name}\tdim {algebra.dim}\tconductor {algebra.conductor}")
        print(" ".join(algebra.labels))
    else:
        print(workspace.load_report(args.name).model_dump_json(indent=2))
    return EXIT_OK


_COMMANDS = {
    "build": cmd_build,
    "weyl": cmd_weyl,
    "verify": cmd_verify,
    "export": cmd_export,
    "import": cmd_import,
    "show": cmd_show,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (defaults to ``sys.argv[1:]``)

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    try:
        config_path = args.config
        if config_path is None and args.workspace:
            candidate = Path(args.workspace) / "config.json"
            config_path = str(candidate) if candidate.exists() else None
        configure(config_path)
        level = args.log_level or get_settings().logging.level
        logging.basicConfig(
            level=level.upper(),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        workspace = Workspace(args.workspace)
        logger.debug(f"Running {args.command} in {workspace.directory}")
        return _COMMANDS[args.command](args, workspace)
    except BoundExceededError as e:
        return _emit_error(e, EXIT_BOUND)
    except WeylGradingsError as e:
        return _emit_error(e, EXIT_FAILURE)
    except ValueError as e:
        return _emit_error(e, EXIT_FAILURE)


if __name__ == "__main__":
    sys.exit(main())
