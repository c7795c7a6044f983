"""Print the lexicon, scores and chosen type at each iteration on the small C/H molecule."""

from graphgram.generators import demo_molecule
from graphgram.grammar import serialize_grammar
from graphgram.graph import format_key
from graphgram.induction import InductionConfig, induce


def main() -> None:
    g = demo_molecule()
    result = induce(g, InductionConfig(inline_single_use=False))
    types = result.grammar.types
    print(f"source dl {result.source_dl}")
    for i, rec in enumerate(result.trace, 1):
        table = ", ".join(f"{format_key(k, types)}:{s}" for k, s in rec.scores)
        print(f"iteration {i}: scores {{{table}}} -> {format_key(rec.chosen, types)} x{rec.matching_size}, dl {rec.description_length}")
    print(serialize_grammar(result.grammar), end="")


if __name__ == "__main__":
    main()
