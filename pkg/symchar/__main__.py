import sys

from symchar.main import main

sys.exit(main())
