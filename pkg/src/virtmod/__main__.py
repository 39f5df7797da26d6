import sys

from virtmod.cli import main

sys.exit(main())
