import sys

from roughlattice.cli import main

sys.exit(main())
