import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from config import LOG_FORMAT, LOG_LEVEL


def setup_logging(level: Optional[str] = None):
    """Configure logging for the application; stdout stays reserved for reports"""
    logger.remove()
    logger.add(sys.stderr, level=(level or LOG_LEVEL).upper(), format=LOG_FORMAT)


def write_output(directory: Path, name: str, text: str) -> Path:
    """Write one generated file, creating the directory when needed"""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / name
    path.write_text(text)
    logger.debug(f"wrote {path}")
    return path


def format_qubit_count(count: Optional[int]) -> str:
    """Qubit count for display; parameterized circuits have none"""
    return "n" if count is None else str(count)
