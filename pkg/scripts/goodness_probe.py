"""Probe three code families for asymptotic goodness at a fixed floor.

Cycle codes of complete graphs and repetition codes both collapse (their
relative distance resp. rate tends to zero), while random rate-1/2 codes
tend to hold a small floor; the probe prints per-index verdicts and the
best floor each sampled family sustains.
"""

import argparse
import random
import sys
from fractions import Fraction

from matroidlab.codes import good_family_probe
from matroidlab.constructions import complete_graph, graphic
from matroidlab.field import make_field
from matroidlab.linalg import Matrix
from matroidlab.matroid import dual, from_generator

GF2 = make_field(2, 1)


def cycle_codes():
    n = 3
    while True:
        yield dual(graphic(complete_graph(n), GF2))
        n += 1


def repetition_codes():
    n = 2
    while True:
        yield from_generator(Matrix(GF2, (0,), tuple(range(n)), [[1] * n]))
        n += 1


def random_half_rate(seed):
    rng = random.Random(seed)
    n = 8
    while True:
        rows = [[rng.randrange(2) for _ in range(n)] for _ in range(n // 2)]
        yield from_generator(Matrix(GF2, tuple(range(n // 2)), tuple(range(n)), rows))
        n += 2


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", type=str, default="1/10")
    ap.add_argument("--horizon", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    eps = Fraction(args.eps)
    families = [
        ("cycle-codes-Kn", cycle_codes()),
        ("repetition", repetition_codes()),
        ("random-rate-half", random_half_rate(args.seed)),
    ]
    for name, family in families:
        verdicts, best = good_family_probe(family, eps, horizon=args.horizon)
        print(f"# {name}: best sustained floor {best} (target {eps})")
        print("index,n,k,d,rate,rel_dist,good")
        for v in verdicts:
            print(f"{v.index},{v.n},{v.k},{v.d},{v.rate},{v.rel_dist},{v.good}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
