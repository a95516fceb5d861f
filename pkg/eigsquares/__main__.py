#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

import sys

from eigsquares.cli import main

if __name__ == '__main__':
    sys.exit(main())
