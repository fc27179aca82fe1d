"""Experiment commands: table1, eq4, scan4, aniso and sweep."""

import logging

from cli.services import experiment_service
from cli.utils.responses import print_summary, summary_rows, write_frame_output, write_text_output
from cli.utils.validators import parse_int_list, parse_label_list

logger = logging.getLogger("simplexnet")

SUMMARY_COLUMNS = {
    "table1": ["side", "simplex", "n_a", "entropy", "reference"],
    "sweep": ["theta", "entropy"],
}


def create_experiment_commands(subparsers, context, handle_exceptions):
    """Register one command per experiment."""

    def run(experiment, args, **overrides):
        config = experiment_service.build_experiment_config(
            experiment, workers=context.workers, output=args.out, **overrides)
        outcome = experiment_service.run_and_store(config, context.storage)
        if outcome.frame is not None:
            write_frame_output(args.out, outcome.frame, outcome.provenance)
        else:
            write_text_output(args.out, outcome.text, outcome.provenance)

        if experiment in SUMMARY_COLUMNS:
            columns = SUMMARY_COLUMNS[experiment]
            print_summary(experiment, columns, summary_rows(outcome.frame, columns))
        else:
            facts = experiment_service.outcome_summary(outcome)
            print_summary(experiment, ["key", "value"], facts.items())
        return outcome

    @handle_exceptions
    def table1(args):
        run("table1", args,
            sides=parse_int_list(args.sides, "patch sides") if args.sides else None,
            core_rows=parse_int_list(args.core_rows, "core sizes") if args.core_rows else None,
            simplices=parse_label_list(args.simplices) if args.simplices else None,
            placement=args.placement)

    @handle_exceptions
    def eq4(args):
        run("eq4", args, field=args.field, class_separation=args.separation)

    @handle_exceptions
    def scan4(args):
        run("scan4", args, grid=args.grid, seed=args.seed, restarts=args.restarts,
            max_iterations=args.max_iterations, tolerance=args.tolerance)

    @handle_exceptions
    def aniso(args):
        run("aniso", args)

    @handle_exceptions
    def sweep(args):
        run("sweep", args, sides=[args.side], core_rows=[args.core_rows], points=args.points)

    parser = subparsers.add_parser("table1", help="Outward entangling power of the triangular simplices")
    parser.add_argument("--sides", help="Comma-separated patch sides (default 3,4,5,6)")
    parser.add_argument("--core-rows", dest="core_rows", help="Comma-separated core sizes in rows (default 2,3,4)")
    parser.add_argument("--simplices", help="Comma-separated simplex labels")
    parser.add_argument("--placement", choices=("apex", "centered"))
    parser.add_argument("--out", help="CSV output (stdout when omitted)")
    parser.set_defaults(handler=table1)

    parser = subparsers.add_parser("eq4", help="Side-2 patch ground state at vanishing field")
    parser.add_argument("--field", type=float)
    parser.add_argument("--separation", type=float, help="Magnitude gap separating amplitude classes")
    parser.add_argument("--out", help="Text report output (stdout when omitted)")
    parser.set_defaults(handler=eq4)

    parser = subparsers.add_parser("scan4", help="Search symmetric 4-qubit simplices on the square network")
    parser.add_argument("--grid", type=int, help="Points per angle of the coarse grid")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--restarts", type=int)
    parser.add_argument("--max-iterations", dest="max_iterations", type=int)
    parser.add_argument("--tolerance", type=float)
    parser.add_argument("--out", help="CSV output of every evaluation (stdout when omitted)")
    parser.set_defaults(handler=scan4)

    parser = subparsers.add_parser("aniso", help="Ground manifolds with direction-dependent couplings")
    parser.add_argument("--out", help="Text report output (stdout when omitted)")
    parser.set_defaults(handler=aniso)

    parser = subparsers.add_parser("sweep", help="Entropy against the W / W-bar weight of the simplex")
    parser.add_argument("--side", type=int, default=4)
    parser.add_argument("--core-rows", dest="core_rows", type=int, default=3)
    parser.add_argument("--points", type=int, default=11)
    parser.add_argument("--out", help="CSV output (stdout when omitted)")
    parser.set_defaults(handler=sweep)
