"""Run ``python -m hexcol``."""

import sys

from hexcol.cli import run

if __name__ == "__main__":
    sys.exit(run())
