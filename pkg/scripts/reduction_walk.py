"""Show alcove reductions of eta/l for a few seeded random coroots of one type."""
import argparse
import random

from loopstrata.rootsys import Coweight, build_root_system
from loopstrata.weylreduce import gieseker_limit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("type", nargs="?", default="B3")
    ap.add_argument("--count", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rs = build_root_system(args.type)
    rng = random.Random(args.seed)
    for _ in range(args.count):
        l = rng.randint(1, 6)
        eta = Coweight(tuple(rng.randint(-6, 6) for _ in range(rs.rank)))
        g = gieseker_limit(rs, l, eta)
        red = ",".join(str(x) for x in g.reduced.coeffs)
        src = ",".join(str(x) for x in eta.coeffs)
        print(f"l={l} eta=({src}) -> ({red}) word length {len(g.word)} "
              f"face {g.face} chain length {g.chain_length} slices agree {g.slice_equal}")


if __name__ == "__main__":
    main()
