"""Exact Cover model counting command."""

from cli.services import compute_service
from cli.utils.constants import COVER_METHODS
from cli.utils.decorators import require_files
from simplexnet.formats.instance_format import read_instance


def create_cover_commands(subparsers, context, handle_exceptions):
    """Register the `xcover` command."""

    @handle_exceptions
    @require_files("instance")
    def xcover(args):
        instance = read_instance(args.instance)
        count = compute_service.count_cover(instance, args.method, context.caps, context.workers)
        print(f"solutions = {count}")

    parser = subparsers.add_parser("xcover", help="Count Exact Cover solutions")
    parser.add_argument("--instance", required=True, help="Instance file (p ec / c lines)")
    parser.add_argument("--method", choices=COVER_METHODS, default="tn")
    parser.set_defaults(handler=xcover)
