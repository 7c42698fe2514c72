import sys

from kmeasure.cli import main

sys.exit(main())
