"""Does lambda' of G1 (R) G2 depend on the rotation map?

For seeded factor pairs, compute lambda and lambda' of the product under the
sorted-neighbours map and several random port labelings, and print every
pair where the values spread.
"""

import argparse
import json
import random

from lpl.connectivity import edge_connectivity, restricted_edge_connectivity
from lpl.replacement import replacement_product
from lpl.verifier import random_product_pairs, random_rotation_map


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=30)
    ap.add_argument("--labelings", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    spread = []
    for g1, rot, g2, label in random_product_pairs(args.seed, args.count):
        values = set()
        for k in range(args.labelings + 1):
            r = rot if k == 0 else random_rotation_map(g1, rng)
            prod, _ = replacement_product(g1, r, g2)
            values.add((edge_connectivity(prod)[0], restricted_edge_connectivity(prod).value))
        if len(values) > 1:
            spread.append({"pair": label, "values": sorted(values)})
        print(f"{label}: {sorted(values)}")
    print(json.dumps({"pairs": args.count, "labelings": args.labelings, "spread": spread}, indent=2))


if __name__ == "__main__":
    main()
