import sys

from ittm.cli import parse_args, main


if __name__ == '__main__':
    sys.exit(main(parse_args()))
