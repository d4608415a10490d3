import sys

from pascaldet.cli import main

sys.exit(main())
