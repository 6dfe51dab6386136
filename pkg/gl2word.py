"""Entry point: python gl2word.py decompose '[-65, 17; 42, -11]'"""

import sys

from src.cli import main


if __name__ == '__main__':
    sys.exit(main())
