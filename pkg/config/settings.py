import os

from dotenv import load_dotenv

load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# Decision procedures
INCLUSION_BUDGET = int(os.getenv("LSTA_INCLUSION_BUDGET", "10000000"))
ENUMERATION_MAX_HEIGHT = int(os.getenv("LSTA_ENUMERATION_MAX_HEIGHT", "8"))

# Verification pipeline
REDUCE_AFTER_GATE = _flag("LSTA_REDUCE_AFTER_GATE", "true")
CHECK_WITNESS = _flag("LSTA_CHECK_WITNESS", "true")

# Logging Configuration
LOG_LEVEL = os.getenv("LSTA_LOG_LEVEL", "WARNING")
LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {name} - {level} - {message}"

# Benchmark Configuration
DEFAULT_BENCHMARK_SEED = int(os.getenv("LSTA_BENCHMARK_SEED", "0"))
BV_SINGLE_PATTERN = "10"
FERMIONIC_ANGLE = 1
