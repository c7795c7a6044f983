"""Production count and hierarchy depth of the nucleotide proxy chain as n grows.

Also lists, per non-terminal instance that covers exactly one unit part
(backbone or base), the depth of its type, with and without inlining.
"""

import argparse

from graphgram.generators import nucleotide_chain, unit_parts
from graphgram.grammar import hierarchy_depth, leaf_nodes, max_hierarchy_depth
from graphgram.induction import InductionConfig, induce


def survey(n: int, inline: bool):
    grammar = induce(nucleotide_chain(n), InductionConfig(inline_single_use=inline)).grammar
    roles = {}
    for backbone, base in unit_parts(n):
        roles[backbone], roles[base] = "backbone", "base"
    found = {"backbone": set(), "base": set()}
    for hid, (tid, _) in grammar.derivation.items():
        role = roles.get(leaf_nodes(grammar, hid))
        if role:
            found[role].add((grammar.types.name(tid), hierarchy_depth(grammar, tid)))
    return len(grammar.productions), max_hierarchy_depth(grammar), found


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[4, 8, 16, 32])
    args = ap.parse_args()
    for inline in (True, False):
        print(f"inline_single_use={inline}")
        for n in args.n:
            prods, depth, found = survey(n, inline)
            print(f"  n={n:<3} productions={prods:<3} max_depth={depth:<3} backbone={sorted(found['backbone'])} base={sorted(found['base'])}")


if __name__ == "__main__":
    main()
