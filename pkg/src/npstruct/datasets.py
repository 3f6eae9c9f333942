"""Bundled datasets and default resources."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .assoc import NounTriple
from .coordination import CoordQuad, load_coord_dataset
from .decisions import LEFT, RIGHT
from .morphology import MorphLexicon
from .paraphrase import ParaphraseInventory

LABEL_BY_TAG = {"left": LEFT, "right": RIGHT}


def data_path(name: str) -> Path:
    """Filesystem path of a bundled data file."""
    return Path(resources.files("npstruct.data") / name)


def load_bracketing_dataset(path: str | Path) -> list[tuple[NounTriple, str]]:
    """Read a TSV of ``w1 w2 w3 label`` rows (label left/right).

    A trailing frequency column, if present, is ignored.
    """
    rows = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) not in (4, 5) or parts[3] not in LABEL_BY_TAG:
            raise ValueError(f"bad dataset row on line {lineno}")
        w1, w2, w3, label = parts[:4]
        rows.append((NounTriple(w1, w2, w3), LABEL_BY_TAG[label]))
    return rows


def biomedical_bracketing() -> list[tuple[NounTriple, str]]:
    """The bundled biomedical three-word compound dataset."""
    return load_bracketing_dataset(data_path("bracketing_biomedical.tsv"))


def treebank_coordination() -> list[tuple[CoordQuad, str]]:
    """The bundled coordination dataset."""
    return load_coord_dataset(data_path("coordination_treebank.tsv"))


def default_lexicon() -> MorphLexicon:
    """The bundled morphological lexicon."""
    return MorphLexicon.load(data_path("lexicon.tsv"))


def default_inventory() -> ParaphraseInventory:
    """The bundled paraphrase inventory."""
    return ParaphraseInventory.load(data_path("paraphrase_inventory.txt"))
