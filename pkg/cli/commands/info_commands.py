"""Informational command."""

import simplexnet
from cli.utils.responses import print_summary
from simplexnet.harness.config import EXPERIMENTS
from simplexnet.simplex.catalog import available_simplices


def create_info_commands(subparsers, context, handle_exceptions):
    """Register the `info` command."""

    @handle_exceptions
    def info(args):
        print_summary("simplexnet", ["key", "value"], [
            ("version", simplexnet.__version__),
            ("simplices", ", ".join(available_simplices())),
            ("experiments", ", ".join(EXPERIMENTS)),
            ("workers", context.workers),
            ("storage", "enabled" if context.storage is not None else "disabled"),
        ])
        print_summary("caps", ["cap", "value"], context.caps.model_dump().items())
        if context.storage is not None:
            runs = context.storage.load_runs(args.experiment)
            print_summary("runs", ["run_id", "experiment", "config_hash", "created_at"],
                          [(r["run_id"], r["experiment"], r["config_hash"][:12], r["created_at"]) for r in runs])

    parser = subparsers.add_parser("info", help="Show version, catalog, caps and stored runs")
    parser.add_argument("--experiment", choices=EXPERIMENTS, help="Only list runs of this experiment")
    parser.set_defaults(handler=info)
