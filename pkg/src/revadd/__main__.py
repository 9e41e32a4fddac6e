import sys

from revadd.cli import main

sys.exit(main())
