import sys

from ttframes.frameworks.cli import main

sys.exit(main())
