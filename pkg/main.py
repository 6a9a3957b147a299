"""
perfcone - Main Entry Point

Exact top intersection numbers of the Hodge class and the boundary
divisor on the perfect cone compactification of A_g, with golden-table
verification and dual-path cross-checks.

    python main.py compute --genus 4 --n 7 --format json
    python main.py table --g-min 2 --g-max 7 --format md
    python main.py verify
    python main.py crosscheck --g-max 10
"""

import sys

# Setup logging before importing other modules
from app.utils.logger import setup_logging
setup_logging()

from app.cli.commands import main


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
