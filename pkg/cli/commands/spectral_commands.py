"""Commands for ground states, entropies and classical ground manifolds."""

import logging

from cli.services import compute_service
from cli.utils.constants import GROUND_RUN_ID
from cli.utils.decorators import require_files
from cli.utils.responses import format_value, write_text_output
from cli.utils.validators import parse_region
from simplexnet.formats.manifold_format import format_manifold
from simplexnet.formats.state_format import read_state, write_state

logger = logging.getLogger("simplexnet")


def create_spectral_commands(subparsers, context, handle_exceptions):
    """Register the `eig`, `entropy` and `ground` commands."""

    @handle_exceptions
    def eig(args):
        lattice_file = compute_service.load_lattice(args.lattice)
        state, energy = compute_service.small_field_ground(lattice_file, args.J, args.field, context.caps)
        header = {"energy": format_value(energy), "J": repr(args.J), "field": repr(args.field)}
        print(f"E0 = {format_value(energy)}")
        if args.out:
            write_state(args.out, state, header, threshold=args.threshold)
            logger.info("Wrote ground state to %s", args.out)

    @handle_exceptions
    @require_files("state")
    def entropy(args):
        state = read_state(args.state)
        lattice_file = compute_service.load_lattice(args.lattice) if args.lattice else None
        value = compute_service.region_entropy(state, parse_region(args.region), context.caps, lattice_file)
        write_text_output(args.out, f"S = {format_value(value)}")

    @handle_exceptions
    def ground(args):
        lattice_file = compute_service.load_lattice(args.lattice)
        manifold = compute_service.ground_manifold(lattice_file, context.caps, context.workers)
        if context.storage is not None:
            context.storage.save_ground_manifold(GROUND_RUN_ID, {
                "lattice": args.lattice,
                "n_sites": lattice_file.lattice.n_sites,
                "degeneracy": manifold.degeneracy,
                "energy": float(manifold.energy),
            })
        write_text_output(args.out, format_manifold(manifold))

    parser = subparsers.add_parser("eig", help="Ground state at a small transverse field")
    parser.add_argument("--lattice", required=True, help="Lattice file, six-site, square-network or patch:<side>")
    parser.add_argument("--J", type=float, default=1.0, help="Antiferromagnetic coupling per up-triangle bond")
    parser.add_argument("--lambda", dest="field", type=float, default=1e-3, help="Transverse field")
    parser.add_argument("--threshold", type=float, default=0.0)
    parser.add_argument("--out", help="State CSV output")
    parser.set_defaults(handler=eig)

    parser = subparsers.add_parser("entropy", help="Entanglement entropy of a region of a stored state")
    parser.add_argument("--state", required=True, help="State CSV file")
    parser.add_argument("--region", required=True, help="Comma-separated sites, e.g. 0,1,2")
    parser.add_argument("--lattice", help="Lattice the state lives on (defaults to bare qubits)")
    parser.add_argument("--out", help="Text output (stdout when omitted)")
    parser.set_defaults(handler=entropy)

    parser = subparsers.add_parser("ground", help="Enumerate the classical ground manifold")
    parser.add_argument("--lattice", required=True, help="Lattice file, six-site, square-network or patch:<side>")
    parser.add_argument("--out", help="Manifold listing output (stdout when omitted)")
    parser.set_defaults(handler=ground)
