"""Allow `python3 -m wpcnsim ...` to behave like the installed script."""

import sys

from wpcnsim.cli import main

if __name__ == "__main__":
    sys.exit(main())
