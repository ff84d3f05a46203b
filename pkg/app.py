# app.py - Main LSTA Verifier Application

import sys
from typing import List, Optional

from loguru import logger

# Import configuration
from config import LOG_LEVEL

# Import command wiring
from cli import cli

# Import utilities
from utils import setup_logging


class LstaVerifierApp:
    """Command-line entry point for the quantum circuit verifier"""

    def __init__(self):
        """Initialize the verifier application"""
        self.initialized = False
        self._initialize_systems()

    def _initialize_systems(self):
        """Initialize logging before any command runs"""
        try:
            setup_logging(LOG_LEVEL)
            self.initialized = True
        except ValueError as e:
            # unknown level name in LSTA_LOG_LEVEL
            setup_logging("WARNING")
            logger.warning(f"logging setup failed ({e}); falling back to WARNING")

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Run one command and return its exit code"""
        try:
            cli.main(args=argv, prog_name="lsta-verify", standalone_mode=True)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 0
        return 0


def main():
    """Main application entry point"""
    app = LstaVerifierApp()
    sys.exit(app.run())


if __name__ == "__main__":
    main()
