#!/usr/bin/env python3
"""Per-voter ablation for compound bracketing.

Runs every voter on its own and the full ensemble over a bracketing
dataset, then prints one evaluation row per configuration plus pairwise
significance tests.

Example:
    python3 scripts/bracketing_experiment.py \
        --index corpus.idx --dataset triples.tsv
    python3 scripts/bracketing_experiment.py --index corpus.idx  # bundled set
"""

from __future__ import annotations

import argparse
import sys

from npstruct import bracketer, datasets, stats
from npstruct.corpus import CorpusIndex, IndexProvider


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--index", required=True, help="saved corpus index")
    parser.add_argument("--dataset", default=None,
                        help="TSV of w1/w2/w3/label rows; bundled set by default")
    parser.add_argument("--default", default="right",
                        help="fallback label when every voter abstains")
    parser.add_argument("--voters", default=",".join(bracketer.DEFAULT_VOTERS))
    args = parser.parse_args()

    provider = IndexProvider(CorpusIndex.load(args.index))
    lex = datasets.default_lexicon()
    inv = datasets.default_inventory()
    if args.dataset:
        rows = datasets.load_bracketing_dataset(args.dataset)
    else:
        rows = datasets.biomedical_bracketing()
    gold = [label for _, label in rows]
    voters = tuple(args.voters.split(","))

    reports: dict[str, stats.EvalReport] = {}
    for name in voters:
        config = bracketer.VoteConfig(voters=(name,), default=None)
        predictions = [
            bracketer.bracket(triple, provider, lex, config, inv).final.label
            for triple, _ in rows
        ]
        reports[name] = stats.evaluate(predictions, gold)
    ensemble = bracketer.VoteConfig(voters=voters, default=args.default)
    predictions = [
        bracketer.bracket(triple, provider, lex, ensemble, inv).final.label
        for triple, _ in rows
    ]
    reports["ensemble"] = stats.evaluate(predictions, gold)

    print(stats.comparison_table(reports))
    return 0


if __name__ == "__main__":
    sys.exit(main())
