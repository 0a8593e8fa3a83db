import os
import logging
from dotenv import load_dotenv
load_dotenv()

logger = logging.getLogger("upho")


def env_int(name: str, default: int) -> int:
    val = os.environ.get(name, "").strip()
    if not val:
        return default
    try:
        return int(val.replace("_", ""))
    except ValueError:
        raise RuntimeError(f"Environment variable {name} must be an integer, got {val!r}")


# перебор слов в замыкании конгруэнции (сумма |Σ|^ℓ по всем длинам)
WORD_BUDGET = env_int("UPHO_BUDGET", 2_000_000)

# поиск плоской укладки: максимальная ширина ранга
WIDTH_LIMIT = env_int("UPHO_WIDTH_LIMIT", 10)

# verify_upho: 1 = последовательно, >1 = пул процессов
WORKERS = env_int("UPHO_WORKERS", 1)

LOG_LEVEL = os.environ.get("UPHO_LOG_LEVEL", "WARNING").strip().upper()
