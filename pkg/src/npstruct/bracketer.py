"""Majority-vote combination of the noun-compound bracketing voters."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import assoc, paraphrase, surface
from .assoc import NounTriple
from .corpus import CountProvider, CountQuery
from .decisions import ABSTAIN, LEFT, Decision, abstain, majority_vote
from .morphology import MorphLexicon, inflections

# Voters combined by default: the strongest individual models.
DEFAULT_VOTERS = (
    "chi2-adjacency",
    "chi2-dependency",
    "concat-dependency",
    "concat-triple",
    "genitive",
    "abbreviation",
    "paraphrases",
    "surface",
)

ALL_VOTERS = (
    "freq-adjacency", "freq-dependency",
    "prob-adjacency", "prob-dependency",
    "pmi-adjacency", "pmi-dependency",
    "chi2-adjacency", "chi2-dependency",
    "concat-adjacency", "concat-dependency", "concat-triple",
    "wildcard-adjacency", "wildcard-dependency",
    "wildcard-adjacency-reversed", "wildcard-dependency-reversed",
    "genitive", "abbreviation", "reorder", "inflection-variability", "swap",
    "paraphrases", "surface",
)


@dataclass(frozen=True)
class VoteConfig:
    """Which voters run and how their votes combine."""

    voters: tuple[str, ...] = DEFAULT_VOTERS
    default: str | None = LEFT
    margin: float = 0.0
    stars: int = 1
    snippet_limit: int = 1000

    def __post_init__(self) -> None:
        unknown = set(self.voters) - set(ALL_VOTERS)
        if unknown:
            raise ValueError(f"unknown voters: {sorted(unknown)}")


@dataclass
class BracketResult:
    """Per-voter decisions plus the combined outcome for one triple."""

    triple: NounTriple
    votes: dict[str, Decision] = field(default_factory=dict)
    final: Decision = field(default_factory=lambda: Decision(ABSTAIN))


def triple_snippets(
    provider: CountProvider,
    lex: MorphLexicon,
    triple: NounTriple,
    limit: int,
) -> list[str]:
    """Raw sentences containing the compound, genitive variants included."""
    i1, i2, i3 = (inflections(lex, w) for w in triple.words())
    queries = [
        CountQuery.of(i1, i2, i3),
        CountQuery.of(i1, "s", i2, i3),
        CountQuery.of(i1, i2, "s", i3),
    ]
    out: list[str] = []
    seen: set[str] = set()
    for q in queries:
        for snippet in provider.snippets(q, limit):
            if snippet not in seen:
                seen.add(snippet)
                out.append(snippet)
    return out[:limit]


def run_voter(
    name: str,
    triple: NounTriple,
    provider: CountProvider,
    lex: MorphLexicon,
    config: VoteConfig,
    inventory: paraphrase.ParaphraseInventory | None = None,
) -> Decision:
    """Run one named voter, turning provider errors into abstentions."""
    inv = inventory or paraphrase.ParaphraseInventory()
    try:
        kind, _, model = name.partition("-")
        if kind in assoc.ASSOC_KINDS:
            return assoc.assoc_bracketing(
                kind, model, provider, lex, triple, config.margin
            )
        if kind == "concat":
            return surface.concatenation_decision(provider, lex, triple, model)
        if kind == "wildcard":
            return surface.wildcard_decision(
                provider, lex, triple, model, config.stars
            )
        if name in surface.MISC_KINDS:
            return surface.misc_decision(name, provider, lex, triple)
        if name == "paraphrases":
            return paraphrase.paraphrase_decision(provider, triple, inv, lex)
        if name == "surface":
            snippets = triple_snippets(provider, lex, triple, config.snippet_limit)
            decision, _tally = surface.surface_vote(snippets, triple, lex)
            return decision
        raise ValueError(f"unknown voter {name!r}")
    except (assoc.ZeroMarginalError, assoc.DegenerateTableError) as exc:
        return abstain(name, note=str(exc))


def bracket(
    triple: NounTriple,
    provider: CountProvider,
    lex: MorphLexicon,
    config: VoteConfig = VoteConfig(),
    inventory: paraphrase.ParaphraseInventory | None = None,
) -> BracketResult:
    """Run every enabled voter on a triple and combine by majority vote."""
    result = BracketResult(triple)
    for name in config.voters:
        result.votes[name] = run_voter(name, triple, provider, lex, config, inventory)
    result.final = majority_vote(list(result.votes.values()), config.default)
    return result
