import sys

from justaudit.cli import main

sys.exit(main())
