#!/usr/bin/env python3
"""pfrobenius - Main Entry Point.

Exact p-Frobenius numbers, p-genus and (weighted) power sums over
p-numerical semigroups.
"""

import logging
import sys

from src.cli import run

# Configure logging; standard output is reserved for results
logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    handlers=[
        logging.StreamHandler(sys.stderr),
    ]
)
logger = logging.getLogger(__name__)


def main():
    """Main entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
