"""
simplexnet - simplex tensor networks for frustrated lattices

Command-line entry point: contracts simplex networks, diagonalizes small transverse-field
Hamiltonians, counts Exact Cover solutions and runs the reproduction experiments.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from cli.commands.cover_commands import create_cover_commands
from cli.commands.experiment_commands import create_experiment_commands
from cli.commands.info_commands import create_info_commands
from cli.commands.network_commands import create_network_commands
from cli.commands.spectral_commands import create_spectral_commands
from cli.context import AppContext
from cli.utils.config import build_app_config, load_config_file
from cli.utils.constants import DEFAULT_CONFIG_PATH, EXIT_ERROR
from cli.utils.decorators import handle_exceptions
from simplexnet.store.factory import get_storage

logger = logging.getLogger("simplexnet")


def initialize_storage(config: dict):
    """Initialize storage from configuration."""
    storage_conf = build_app_config(config).storage
    storage = get_storage(storage_type=storage_conf.type, config={"db_path": storage_conf.db_path})
    logger.info("Storage initialized: %s (%s)", storage_conf.type, storage_conf.db_path)
    return storage


def load_config(config_path: Optional[str]) -> dict:
    """An explicitly named file must exist; the default file is optional."""
    if config_path is None:
        try:
            return load_config_file(DEFAULT_CONFIG_PATH)
        except FileNotFoundError:
            return {}
    return load_config_file(config_path)


def build_parser(context: AppContext) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplexnet", description="Simplex tensor networks for frustrated lattices")
    parser.add_argument("--config", help=f"Config file path (default {DEFAULT_CONFIG_PATH} when present)")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--no-store", dest="no_store", action="store_true", help="Do not persist results")
    subparsers = parser.add_subparsers(dest="command", required=True)

    create_network_commands(subparsers, context, handle_exceptions)
    create_spectral_commands(subparsers, context, handle_exceptions)
    create_cover_commands(subparsers, context, handle_exceptions)
    create_experiment_commands(subparsers, context, handle_exceptions)
    create_info_commands(subparsers, context, handle_exceptions)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    context = AppContext()
    args = build_parser(context).parse_args(argv)

    try:
        config = load_config(args.config)
        app_config = build_app_config(config)
    except (FileNotFoundError, json.JSONDecodeError, ValidationError) as e:
        logging.basicConfig(format='[%(asctime)s] %(levelname)-8s %(message)s', level=logging.INFO)
        logger.error("Configuration error: %s", e)
        return EXIT_ERROR

    level = logging.DEBUG if args.verbose else getattr(logging, app_config.logging.level)
    logging.basicConfig(format='[%(asctime)s] %(levelname)-8s %(message)s', level=level)
    context.config = config

    if not args.no_store and app_config.storage.enabled:
        try:
            context.storage = initialize_storage(config)
        except Exception as e:
            logger.error("Storage initialization failed: %s", e)
            return EXIT_ERROR

    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())
