import sys

from edgecalc.cli import main

sys.exit(main())
