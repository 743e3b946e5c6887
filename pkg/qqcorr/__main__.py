import sys

from qqcorr.main import main

sys.exit(main())
