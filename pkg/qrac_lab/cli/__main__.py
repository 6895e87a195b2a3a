import sys

from qrac_lab.cli.main import main

sys.exit(main())
