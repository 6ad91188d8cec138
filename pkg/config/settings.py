import os
from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} должен быть целым числом, получено {raw!r}")
    if value < minimum:
        raise ValueError(f"{name} должен быть ≥ {minimum}, получено {value}")
    return value


class Settings:
    def __init__(self):
        self.log_level = os.getenv("LSA_LOG_LEVEL", "WARNING").upper()
        self.log_file = os.getenv("LSA_LOG_FILE") or None
        self.seed = _int_env("LSA_SEED", 0)
        self.trials = _int_env("LSA_TRIALS", 8)
        self.search_budget = _int_env("LSA_SEARCH_BUDGET", 100_000_000, minimum=1)
        self.jobs = _int_env("LSA_JOBS", 1, minimum=1)
        self.split_depth = _int_env("LSA_SPLIT_DEPTH", 4)

        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"LSA_LOG_LEVEL не распознан: {self.log_level}")

settings = Settings()
