"""Tri-valued decisions shared by all disambiguation tasks.

Each task compares a left-hand and a right-hand evidence score; the
winning side's task label is emitted, and ties (within an optional
margin) abstain.
"""

from __future__ import annotations

from dataclasses import dataclass

ABSTAIN = "abstain"

LEFT = "left"
RIGHT = "right"

NOUN = "noun"
VERB = "verb"

NOUN_COORD = "noun-coord"
NP_COORD = "np-coord"

BRACKET_LABELS = (LEFT, RIGHT)
ATTACH_LABELS = (NOUN, VERB)
COORD_LABELS = (NOUN_COORD, NP_COORD)


@dataclass(frozen=True)
class Decision:
    """Outcome of one voter: a label or an abstention, with its scores."""

    label: str
    left_score: float = 0.0
    right_score: float = 0.0
    model: str = ""
    note: str = ""

    @property
    def abstained(self) -> bool:
        return self.label == ABSTAIN


def compare(
    left_score: float,
    right_score: float,
    left_label: str,
    right_label: str,
    model: str,
    margin: float = 0.0,
) -> Decision:
    """Pick the side whose score exceeds the other by more than ``margin``."""
    if left_score - right_score > margin:
        label = left_label
    elif right_score - left_score > margin:
        label = right_label
    else:
        label = ABSTAIN
    return Decision(label, left_score, right_score, model)


def abstain(model: str, note: str = "") -> Decision:
    """An abstention, optionally carrying a diagnostic note."""
    return Decision(ABSTAIN, model=model, note=note)


def majority_vote(decisions: list[Decision], default: str | None = None) -> Decision:
    """Strict majority among non-abstaining voters; ties fall to ``default``.

    With no default set, ties and empty slates abstain.
    """
    votes: dict[str, int] = {}
    for d in decisions:
        if not d.abstained:
            votes[d.label] = votes.get(d.label, 0) + 1
    if votes:
        top = max(votes.values())
        leaders = [label for label, n in votes.items() if n == top]
        if len(leaders) == 1:
            return Decision(leaders[0], model="majority-vote")
    if default is not None:
        return Decision(default, model="majority-vote", note="default")
    return Decision(ABSTAIN, model="majority-vote", note="tie")
