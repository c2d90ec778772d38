"""Recompute the published example values and write the claim report as JSON."""

import argparse
import json
import sys

from lpl.connectivity import LambdaPrimeOptions
from lpl.verifier import verify_paper_examples


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="-", help="output path, '-' for stdout")
    ap.add_argument("--quick", action="store_true", help="skip the larger instances")
    ap.add_argument("--backend", choices=["python", "scipy"], default="python")
    args = ap.parse_args()

    rep = verify_paper_examples(
        LambdaPrimeOptions(backend=args.backend),
        include_large=not args.quick,
        progress=lambda msg: print(f"[suite] {msg}", file=sys.stderr),
    )
    text = json.dumps(rep.to_json(), indent=2, sort_keys=True)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(f"[suite] {rep.summary()}", file=sys.stderr)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
