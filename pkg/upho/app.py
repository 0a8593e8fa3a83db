import argparse
import logging
import sys
from typing import List, Optional

from .config.settings import LOG_LEVEL
from .cli.handlers import process_command
from .cli.router import build_parser


def create_app() -> argparse.ArgumentParser:
    return build_parser()


def main(argv: Optional[List[str]] = None) -> int:
    # stdout занят отчётами, логи идут в stderr
    logging.basicConfig(
        level=getattr(logging, LOG_LEVEL, logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    return process_command(argv)
