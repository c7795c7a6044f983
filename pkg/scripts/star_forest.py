"""Compare both selection strategies on degree-relabeled star forests."""

import argparse

from graphgram.generators import star_forest
from graphgram.grammar import leaf_nodes
from graphgram.graph import relabel_by_degree
from graphgram.induction import InductionConfig, SelectionStrategy, induce


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3, 6, 9])
    args = ap.parse_args()
    print("k  m  strategy  iterations  first  productions  dl_before  dl_after  mixed")
    for m in args.m:
        g = relabel_by_degree(star_forest(args.k, m))
        for strategy in SelectionStrategy:
            res = induce(g, InductionConfig(strategy=strategy))
            gr = res.grammar
            mixed = sum(len({x // (m + 1) for x in leaf_nodes(gr, h)}) > 1 for h in gr.derivation)
            first = res.trace[0].matching_size if res.trace else 0
            print(
                f"{args.k:<2} {m:<2} {strategy.value:<9} {res.iterations:<11} {first:<6} "
                f"{len(gr.productions):<12} {res.source_dl:<10} {res.final_dl:<9} {mixed}"
            )


if __name__ == "__main__":
    main()
