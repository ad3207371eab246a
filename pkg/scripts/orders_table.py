"""Print marks n_i, vertex orders k_i and k_G for every simple type up to a rank."""
import argparse

from loopstrata.alcove import orders
from loopstrata.rootsys import all_types, build_root_system


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=8)
    args = ap.parse_args()
    print(f"{'type':<5} {'marks n_0..n_r':<28} {'orders k_0..k_r':<28} k_G")
    for t in all_types(args.max_rank):
        rs = build_root_system(t)
        o = orders(rs)
        print(f"{str(t):<5} {' '.join(map(str, rs.marks0)):<28} {' '.join(map(str, o.k_each)):<28} {o.k_G}")


if __name__ == "__main__":
    main()
