"""Allow invocation as ``python -m starline``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
