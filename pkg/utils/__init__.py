from .helpers import (
    setup_logging,
    write_output,
    format_qubit_count
)

__all__ = [
    "setup_logging",
    "write_output",
    "format_qubit_count"
]
