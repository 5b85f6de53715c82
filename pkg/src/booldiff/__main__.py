"""Allow running the CLI as ``python -m booldiff``."""

import sys

from .cli import main

sys.exit(main())
