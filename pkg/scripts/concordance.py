#!/usr/bin/env python3
"""Phrase counts and example sentences from a saved corpus index.

Counts an exact phrase (optionally with a wildcard gap) and prints the
sentences it occurs in.

Examples:
    python3 scripts/concordance.py --index corpus.idx brain stem cells
    python3 scripts/concordance.py --index corpus.idx --gap 1 2 \
        --split 1 brain cells
"""

from __future__ import annotations

import argparse
import sys

from npstruct.corpus import CorpusIndex, CountQuery


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--index", required=True, help="saved corpus index")
    parser.add_argument("--gap", nargs=2, type=int, metavar=("MIN", "MAX"),
                        default=None, help="wildcard gap width range")
    parser.add_argument("--split", type=int, default=1,
                        help="how many words precede the gap")
    parser.add_argument("--limit", type=int, default=10,
                        help="maximum number of example sentences")
    parser.add_argument("words", nargs="+", help="phrase words; use a|b for alternatives")
    args = parser.parse_args()

    index = CorpusIndex.load(args.index)
    positions = [frozenset(w.split("|")) for w in args.words]
    if args.gap is None:
        query = CountQuery.of(*positions)
    else:
        query = CountQuery.gapped(
            positions[: args.split], positions[args.split :], *args.gap
        )
    print(f"{query.canonical()}\t{index.count(query)}")
    for sentence in index.snippets(query, args.limit):
        print(f"  {sentence}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
