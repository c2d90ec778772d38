"""Check every product bound on seeded random regular factor pairs."""

import argparse
import json
import sys
from collections import Counter

from lpl.verifier import bound_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--out", default=None, help="write the full report here")
    args = ap.parse_args()

    rep = bound_sweep(args.seed, args.count, progress=lambda m: print(f"[sweep] {m}", file=sys.stderr))
    per_claim = Counter((c.claim, c.status) for c in rep.claims)
    for (claim, status), k in sorted(per_claim.items()):
        print(f"{claim:32s} {status:6s} {k}")
    for c in rep.failures():
        print(f"FAIL {c.claim} on {c.instance}: {c.lhs} {c.relation} {c.rhs} {c.detail}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rep.to_json(), fh, indent=2, sort_keys=True)
    print(json.dumps(rep.summary()))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
