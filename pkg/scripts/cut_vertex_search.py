"""Search for a factor with a cut vertex where the lambda lower bound breaks."""

import argparse
import json
import sys

from lpl.verifier import search_cut_vertex_witness


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=20)
    ap.add_argument("--degree", type=int, action="append", help="multiple of 4; repeatable")
    args = ap.parse_args()

    w = search_cut_vertex_witness(args.seed, args.tries, tuple(args.degree or [8]))
    if w is None:
        print(json.dumps({"witness": None}))
        return 1
    print(json.dumps(w.to_json(), indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
