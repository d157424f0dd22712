#!/usr/bin/env python
import logging
import sys
from .cli import cli_main


def main():
    logging.basicConfig(level=logging.WARNING,
                        format="%(levelname)s: %(funcName)s@%(filename)s(%(lineno)d): %(message)s")
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == '__main__':
    main()
