import sys
from typing import List, Optional

from ..config.settings import logger
from ..errors import UphoError
from .router import route_command


def process_command(argv: Optional[List[str]] = None) -> int:
    """Запуск одной команды; никаких трейсбеков наружу, только код выхода."""
    try:
        return route_command(argv)
    except UphoError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:
        # argparse: --help -> 0, ошибка использования -> 2
        return e.code if isinstance(e.code, int) else 2
    except Exception:
        logger.exception("unexpected failure")
        return 2
