#!/usr/bin/env python3
"""Per-voter ablation for coordination-scope decisions.

Evaluates each coordination voter alone and the full ensemble over a
coordination dataset (the bundled one by default) and prints evaluation
rows plus pairwise significance tests.

Example:
    python3 scripts/coordination_experiment.py --index corpus.idx
"""

from __future__ import annotations

import argparse
import sys

from npstruct import coordination, datasets, stats
from npstruct.corpus import CorpusIndex, IndexProvider
from npstruct.decisions import NP_COORD


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--index", required=True, help="saved corpus index")
    parser.add_argument("--dataset", default=None,
                        help="TSV of n1/c/n2/h/label rows; bundled set by default")
    parser.add_argument("--default", default=NP_COORD)
    parser.add_argument("--threshold", type=int, default=1,
                        help="paraphrase hit threshold")
    args = parser.parse_args()

    provider = IndexProvider(CorpusIndex.load(args.index))
    lex = datasets.default_lexicon()
    if args.dataset:
        rows = coordination.load_coord_dataset(args.dataset)
    else:
        rows = datasets.treebank_coordination()
    gold = [label for _, label in rows]

    reports: dict[str, stats.EvalReport] = {}
    for name in coordination.DEFAULT_COORD_VOTERS:
        config = coordination.CoordVoteConfig(
            voters=(name,), default=None, threshold=args.threshold
        )
        predictions = [
            coordination.coord_pipeline(quad, provider, lex, config).final.label
            for quad, _ in rows
        ]
        reports[name] = stats.evaluate(predictions, gold)
    ensemble = coordination.CoordVoteConfig(
        default=args.default, threshold=args.threshold
    )
    predictions = [
        coordination.coord_pipeline(quad, provider, lex, ensemble).final.label
        for quad, _ in rows
    ]
    reports["ensemble"] = stats.evaluate(predictions, gold)

    print(stats.comparison_table(reports))
    return 0


if __name__ == "__main__":
    sys.exit(main())
