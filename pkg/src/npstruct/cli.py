"""Command-line surface: indexing, prediction, evaluation, comparison."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bracketer, coordination, datasets, ppattach, relsim, stats
from .corpus import CorpusError, CorpusIndex, IndexProvider, IngestConfig, build_index
from .decisions import LEFT, NP_COORD, RIGHT, VERB
from .morphology import MorphLexicon
from .paraphrase import ParaphraseInventory

USAGE_ERROR = 1
DATA_ERROR = 2

# Named presets: voter set and default label for the two dataset styles.
PRESETS = {
    "encyclopedia": {"default": LEFT},
    "biomedical": {"default": RIGHT},
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        raise SystemExit_(USAGE_ERROR, message)


class SystemExit_(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _build_parser() -> _Parser:
    parser = _Parser(prog="npstruct", description=__doc__)
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved; no randomized components exist")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="build a corpus index")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tagged", action="store_true")

    def common(p: argparse.ArgumentParser, default_label: str) -> None:
        p.add_argument("--index", required=True)
        p.add_argument("--dataset", required=True)
        p.add_argument("--report", default=None)
        p.add_argument("--lexicon", default=None)
        p.add_argument("--default", default=default_label)
        p.add_argument("--preset", choices=sorted(PRESETS), default=None)
        p.add_argument("--snippet-limit", type=int, default=1000)

    p = sub.add_parser("bracket", help="bracket three-word compounds")
    common(p, LEFT)
    p.add_argument("--voters", default=",".join(bracketer.DEFAULT_VOTERS))
    p.add_argument("--margin", type=float, default=0.0)
    p.add_argument("--inventory", default=None)

    p = sub.add_parser("ppattach", help="resolve PP attachment")
    common(p, VERB)
    p.add_argument("--voters", default=",".join(ppattach.DEFAULT_PP_VOTERS))
    p.add_argument("--bootstrap", action="store_true")

    p = sub.add_parser("coord", help="resolve coordination scope")
    common(p, NP_COORD)
    p.add_argument("--voters", default=",".join(coordination.DEFAULT_COORD_VOTERS))
    p.add_argument("--threshold", type=int, default=1)

    p = sub.add_parser("relsim", help="dump joining features for noun pairs")
    p.add_argument("--index", required=True)
    p.add_argument("--pairs", required=True, help="TSV of noun1<TAB>noun2 rows")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--out", required=True)

    p = sub.add_parser("sat", help="solve analogy blocks")
    p.add_argument("--index", required=True)
    p.add_argument("--dataset", required=True,
                   help="TSV rows: stem pair, candidate pairs, gold index")
    p.add_argument("--lexicon", default=None)
    p.add_argument("--report", default=None)

    p = sub.add_parser("semeval", help="binary relation checking")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--index", default=None)
    p.add_argument("--lexicon", default=None)
    p.add_argument("--report", default=None)

    p = sub.add_parser("eval", help="score predictions against gold labels")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--level", type=float, default=0.95)

    p = sub.add_parser("compare", help="compare prediction files pairwise")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", action="append", required=True,
                   help="repeatable; name=path or bare path")
    p.add_argument("--level", type=float, default=0.95)
    return parser


def _load_lexicon(path: str | None) -> MorphLexicon:
    if path is None:
        return datasets.default_lexicon()
    return MorphLexicon.load(path)


def _read_labels(path: str) -> list[str]:
    labels = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip():
            labels.append(line.rstrip("\n").split("\t")[-1])
    return labels


def _require(path: str | None) -> None:
    if path is not None and not Path(path).exists():
        raise SystemExit_(DATA_ERROR, f"missing file: {path}")


def _write_report(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _summarize(predictions: list[str], gold: list[str], level: float) -> str:
    report = stats.evaluate(predictions, gold, level)
    return report.summary()


def _cmd_index(args) -> int:
    _require(args.corpus)
    index = build_index(args.corpus, IngestConfig(tagged=args.tagged))
    index.save(args.out)
    print(f"indexed {index.total_tokens()} tokens")
    return 0


def _cmd_bracket(args) -> int:
    for path in (args.index, args.dataset):
        _require(path)
    lex = _load_lexicon(args.lexicon)
    inv = (
        ParaphraseInventory.load(args.inventory)
        if args.inventory
        else datasets.default_inventory()
    )
    default = PRESETS[args.preset]["default"] if args.preset else args.default
    config = bracketer.VoteConfig(
        voters=tuple(args.voters.split(",")),
        default=None if default == "none" else default,
        margin=args.margin,
        snippet_limit=args.snippet_limit,
    )
    provider = IndexProvider(CorpusIndex.load(args.index))
    rows = datasets.load_bracketing_dataset(args.dataset)
    lines, predictions, gold = [], [], []
    for triple, label in rows:
        result = bracketer.bracket(triple, provider, lex, config, inv)
        votes = "\t".join(d.label for d in result.votes.values())
        lines.append(
            f"{triple.w1}\t{triple.w2}\t{triple.w3}\t{votes}\t{result.final.label}"
        )
        predictions.append(result.final.label)
        gold.append(label)
    _write_report(args.report, lines)
    print(_summarize(predictions, gold, 0.95))
    return 0


def _cmd_ppattach(args) -> int:
    for path in (args.index, args.dataset):
        _require(path)
    lex = _load_lexicon(args.lexicon)
    config = ppattach.PPVoteConfig(
        voters=tuple(args.voters.split(",")),
        default=None if args.default == "none" else args.default,
        snippet_limit=args.snippet_limit,
    )
    provider = IndexProvider(CorpusIndex.load(args.index))
    rows = ppattach.load_pp_dataset(args.dataset)
    quads = [q for q, _ in rows]
    if args.bootstrap:
        results, _model = ppattach.pp_bootstrap(quads, provider, lex, config)
    else:
        results = [ppattach.pp_pipeline(q, provider, lex, config) for q in quads]
    lines = [
        f"{r.quad.v}\t{r.quad.n1}\t{r.quad.p}\t{r.quad.n2}\t{r.final.label}"
        for r in results
    ]
    _write_report(args.report, lines)
    print(_summarize([r.final.label for r in results], [g for _, g in rows], 0.95))
    return 0


def _cmd_coord(args) -> int:
    for path in (args.index, args.dataset):
        _require(path)
    lex = _load_lexicon(args.lexicon)
    config = coordination.CoordVoteConfig(
        voters=tuple(args.voters.split(",")),
        default=None if args.default == "none" else args.default,
        threshold=args.threshold,
        snippet_limit=args.snippet_limit,
    )
    provider = IndexProvider(CorpusIndex.load(args.index))
    rows = coordination.load_coord_dataset(args.dataset)
    results = [
        coordination.coord_pipeline(q, provider, lex, config) for q, _ in rows
    ]
    lines = [
        f"{r.quad.n1}\t{r.quad.c}\t{r.quad.n2}\t{r.quad.h}\t{r.final.label}"
        for r in results
    ]
    _write_report(args.report, lines)
    print(_summarize([r.final.label for r in results], [g for _, g in rows], 0.95))
    return 0


def _cmd_relsim(args) -> int:
    for path in (args.index, args.pairs):
        _require(path)
    lex = _load_lexicon(args.lexicon)
    index = CorpusIndex.load(args.index)
    rows = []
    for line in Path(args.pairs).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        noun1, noun2 = line.rstrip("\n").split("\t")[:2]
        rows.append((noun1, noun2, relsim.extract_pair_features(index, noun1, noun2, lex)))
    relsim.dump_pair_features(rows, args.out)
    return 0


def _cmd_sat(args) -> int:
    for path in (args.index, args.dataset):
        _require(path)
    lex = _load_lexicon(args.lexicon)
    index = CorpusIndex.load(args.index)
    lines, correct, answered = [], 0, 0
    for lineno, line in enumerate(
        Path(args.dataset).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) < 3:
            raise SystemExit_(DATA_ERROR, f"bad analogy row on line {lineno}")
        gold = int(parts[-1])
        words = parts[:-1]
        pairs = [tuple(w.split()) for w in words]
        if any(len(p) != 2 for p in pairs):
            raise SystemExit_(DATA_ERROR, f"bad analogy row on line {lineno}")
        stem, candidates = pairs[0], pairs[1:]
        choice = relsim.solve_sat(stem, candidates, index, lex)
        if choice is not None:
            answered += 1
            correct += int(choice == gold)
        lines.append(f"{line}\t{'abstain' if choice is None else choice}")
    _write_report(args.report, lines)
    print(f"answered {answered}, correct {correct}")
    return 0


def _parse_semeval(path: str) -> list[tuple[relsim.SemevalExample, bool]]:
    rows = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) not in (5, 6) or parts[4] not in ("true", "false"):
            raise SystemExit_(DATA_ERROR, f"bad example on line {lineno}")
        sentence, e1, e2, relation, gold_field = parts[:5]
        query = parts[5] if len(parts) == 6 else ""
        spans = []
        for span in (e1, e2):
            start, _, end = span.partition(":")
            spans.append((int(start), int(end)))
        example = relsim.SemevalExample(
            tuple(sentence.split()), spans[0], spans[1], relation, query
        )
        rows.append((example, gold_field == "true"))
    return rows


def _cmd_semeval(args) -> int:
    for path in (args.train, args.test):
        _require(path)
    _require(args.index)
    lex = _load_lexicon(args.lexicon)
    index = CorpusIndex.load(args.index) if args.index else None
    train = _parse_semeval(args.train)
    test = _parse_semeval(args.test)
    predictions, gold = [], []
    lines = []
    for example, label in test:
        pred = relsim.semeval_classify(example, train, lex, index=index)
        predictions.append(pred)
        gold.append(label)
        lines.append(f"{' '.join(example.tokens)}\t{str(pred).lower()}")
    _write_report(args.report, lines)
    scores = relsim.score_binary(predictions, gold)
    print(
        f"P {scores.precision:.4f} R {scores.recall:.4f} "
        f"F {scores.f1:.4f} Acc {scores.accuracy:.4f}"
    )
    return 0


def _cmd_eval(args) -> int:
    for path in (args.gold, args.pred):
        _require(path)
    gold = _read_labels(args.gold)
    pred = _read_labels(args.pred)
    if len(gold) != len(pred):
        raise SystemExit_(DATA_ERROR, "gold and prediction files differ in length")
    report = stats.evaluate(pred, gold, args.level)
    print("correct\twrong\tn/a\taccuracy\tcoverage")
    print(report.summary())
    return 0


def _cmd_compare(args) -> int:
    _require(args.gold)
    gold = _read_labels(args.gold)
    reports = {}
    for item in args.pred:
        name, _, path = item.rpartition("=")
        if not name:
            name, path = Path(path).stem, path
        _require(path)
        pred = _read_labels(path)
        if len(pred) != len(gold):
            raise SystemExit_(DATA_ERROR, f"{path} differs in length from gold")
        reports[name] = stats.evaluate(pred, gold, args.level)
    print(stats.comparison_table(reports))
    return 0


_COMMANDS = {
    "index": _cmd_index,
    "bracket": _cmd_bracket,
    "ppattach": _cmd_ppattach,
    "coord": _cmd_coord,
    "relsim": _cmd_relsim,
    "sat": _cmd_sat,
    "semeval": _cmd_semeval,
    "eval": _cmd_eval,
    "compare": _cmd_compare,
}


def run(argv: list[str]) -> int:
    """Entry point returning a process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except (CorpusError, ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return DATA_ERROR


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
