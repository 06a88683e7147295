import sys

from hypercolor.cli import main

sys.exit(main())
