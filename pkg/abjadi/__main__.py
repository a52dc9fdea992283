"""python -m abjadi"""

import sys

from .cli import main

sys.exit(main())
