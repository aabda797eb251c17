"""Allow ``python -m hadarank``."""

import sys

from .cli import main

sys.exit(main())
