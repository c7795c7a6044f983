"""Wall-clock time of induction on random graphs of increasing size."""

import argparse
import time

from graphgram.generators import random_graph
from graphgram.grammar import expand
from graphgram.graph import same_graph
from graphgram.induction import InductionConfig, SelectionStrategy, induce


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[250, 776, 2000])
    ap.add_argument("--ratio", type=float, default=3.0, help="edges per node")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    print("nodes  edges  strategy  iterations  dl_before  dl_after  seconds  lossless")
    for n in args.sizes:
        g = random_graph(n, m=int(n * args.ratio), seed=args.seed, labels="C,N,O,P")
        for strategy in SelectionStrategy:
            t = time.perf_counter()
            res = induce(g, InductionConfig(strategy=strategy))
            dt = time.perf_counter() - t
            ok = same_graph(expand(res.grammar), g)
            print(f"{n:<6} {g.num_edges:<6} {strategy.value:<9} {res.iterations:<11} {res.source_dl:<10} {res.final_dl:<9} {dt:<8.2f} {ok}")


if __name__ == "__main__":
    main()
