import sys

from einets.cli import main

sys.exit(main())
