from argparse import ArgumentParser
import logging

from ittm.stdlib import CATALOG, write_stdlib


def parse_args():
    parser = ArgumentParser()

    parser.add_argument('--out_dir', default='stdlib/')
    parser.add_argument('--names', nargs='+', default=sorted(CATALOG))
    parser.add_argument('--n_jobs', type=int, default=1)

    return parser.parse_args()


def main(args):
    logging.basicConfig(level=logging.INFO)
    entries = write_stdlib(args.out_dir, args.names, args.n_jobs)
    logging.info('Wrote %d programs to %s', len(entries), args.out_dir)


if __name__ == '__main__':
    main(parse_args())
