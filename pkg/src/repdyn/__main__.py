"""Entry point for ``python -m repdyn``."""

import sys

from .cli import main

sys.exit(main())
