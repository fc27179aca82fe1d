"""Network contraction command."""

import logging

from cli.services import compute_service
from cli.utils.constants import CONTRACTION_METHODS
from cli.utils.decorators import require_files
from cli.utils.responses import format_value, write_frame_output
from simplexnet.formats.network_format import read_network
from simplexnet.formats.state_format import state_frame, write_state

logger = logging.getLogger("simplexnet")


def create_network_commands(subparsers, context, handle_exceptions):
    """Register the `contract` command."""

    @handle_exceptions
    @require_files("network")
    def contract(args):
        spec = read_network(args.network)
        state, result = compute_service.contract_network(spec, args.method, context.caps, context.workers)
        header = {"method": result.method, "n_sites": str(spec.n_sites),
                  "norm_squared": format_value(result.norm_squared)}
        if args.out:
            write_state(args.out, state, header, threshold=args.threshold)
            logger.info("Wrote %d amplitudes to %s", len(state.nonzero_items(args.threshold)), args.out)
        else:
            write_frame_output(None, state_frame(state, args.threshold), header)

    parser = subparsers.add_parser("contract", help="Contract a simplex network into its physical state")
    parser.add_argument("--network", required=True, help="Network file")
    parser.add_argument("--method", choices=CONTRACTION_METHODS, default="diagonal")
    parser.add_argument("--threshold", type=float, default=0.0, help="Drop amplitudes with modulus at or below this")
    parser.add_argument("--out", help="State CSV output (stdout when omitted)")
    parser.set_defaults(handler=contract)
    return parser
