import sys

from fara.cli import main

sys.exit(main())
