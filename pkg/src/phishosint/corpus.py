"""Labeled email corpora: loading, dedup, sampling, balancing, splitting.

Every operation here is a pure function of its inputs (and a seed where
sampling is involved), so corpora can be processed in parallel and any
stage can be re-run byte-for-byte.
"""

from __future__ import annotations

import csv
import hashlib
import math
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path

import numpy as np

from .errors import DataError, RowError, SchemaError
from . import extract

LANGUAGES = ("en", "ar")

# Canonical on-disk column order for corpus CSV files.
CANONICAL_COLUMNS = ("id", "language", "label", "text")

_LABEL_ALIASES = {
    "phishing": 1,
    "phishing email": 1,
    "safe": 0,
    "safe email": 0,
}


class Label(IntEnum):
    """Binary email class; phishing is the positive class everywhere."""

    SAFE = 0
    PHISHING = 1

    def to_text(self) -> str:
        return "Phishing" if self is Label.PHISHING else "Safe"


def parse_label(value: str) -> Label:
    """Map a raw label string to a Label, case-insensitively."""
    key = value.strip().lower()
    if key not in _LABEL_ALIASES:
        raise ValueError(f"unknown label value {value!r}")
    return Label(_LABEL_ALIASES[key])


@dataclass(frozen=True)
class EmailRecord:
    """One labeled email."""

    id: str
    body: str
    language: str
    label: Label

    def __post_init__(self):
        if not self.body.strip():
            raise DataError(f"record {self.id!r} has an empty body")
        if self.language not in LANGUAGES:
            raise DataError(f"record {self.id!r} has unknown language {self.language!r}")


@dataclass(frozen=True)
class Corpus:
    """An ordered, id-unique sequence of email records."""

    records: tuple[EmailRecord, ...]
    provenance: str = ""

    def __post_init__(self):
        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise DataError(f"duplicate record ids: {dupes[:5]}")

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def class_counts(self) -> dict[Label, int]:
        counts = {Label.SAFE: 0, Label.PHISHING: 0}
        for r in self.records:
            counts[r.label] += 1
        return counts

    def replace(self, records, provenance=None) -> "Corpus":
        return Corpus(
            records=tuple(records),
            provenance=self.provenance if provenance is None else provenance,
        )


@dataclass(frozen=True)
class DatasetSplit:
    """A stratified train/test partition of one corpus."""

    train: Corpus
    test: Corpus
    seed: int
    ratio: float


@dataclass(frozen=True)
class CsvSchema:
    """Column mapping for reading arbitrary corpus CSV files."""

    text_column: str = "text"
    label_column: str = "label"
    id_column: str | None = "id"
    language_column: str | None = "language"
    default_language: str = "en"


def load_csv(path, schema: CsvSchema = CsvSchema()) -> Corpus:
    """Read a labeled email CSV into a Corpus.

    Rows with no id column get zero-based row indices as ids; rows with no
    language column get the schema default. Rows with blank bodies are
    skipped. An unmappable label raises a RowError carrying the row number.
    """
    path = Path(path)
    records = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in (schema.text_column, schema.label_column):
            if col not in header:
                raise SchemaError(f"missing required column {col!r} in {path}")
        opt_id = schema.id_column if schema.id_column in header else None
        opt_lang = schema.language_column if schema.language_column in header else None
        for row_number, row in enumerate(reader):
            body = row[schema.text_column] or ""
            if not body.strip():
                continue
            try:
                label = parse_label(row[schema.label_column] or "")
            except ValueError as exc:
                raise RowError(row_number, str(exc)) from exc
            records.append(
                EmailRecord(
                    id=row[opt_id] if opt_id else str(row_number),
                    body=body,
                    language=row[opt_lang] if opt_lang else schema.default_language,
                    label=label,
                )
            )
    return Corpus(records=tuple(records), provenance=f"loaded from {path.name}")


def write_csv(corpus: Corpus, path) -> None:
    """Write a corpus in the canonical column order (UTF-8, header row)."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CANONICAL_COLUMNS)
        for r in corpus:
            writer.writerow([r.id, r.language, r.label.to_text(), r.body])


def body_digest(body: str) -> str:
    """SHA-256 of the trimmed UTF-8 body; the dedup identity."""
    return hashlib.sha256(body.strip().encode("utf-8")).hexdigest()


def dedup_sha256(corpus: Corpus) -> Corpus:
    """Keep the first record per distinct body digest, preserving order."""
    seen = set()
    kept = []
    for r in corpus:
        digest = body_digest(r.body)
        if digest not in seen:
            seen.add(digest)
            kept.append(r)
    return corpus.replace(kept, provenance=f"{corpus.provenance} | dedup")


def random_sample(
    corpus: Corpus, n: int, seed: int, require_artifacts: bool = False
) -> Corpus:
    """Uniform sample of n records without replacement, order-stable.

    With require_artifacts the candidate pool is restricted to records whose
    body contains at least one URL, hostname or email address.
    """
    if require_artifacts:
        pool = [
            i
            for i, r in enumerate(corpus)
            if extract.extract_all(r.body).has_artifacts()
        ]
    else:
        pool = list(range(len(corpus)))
    if n > len(pool):
        raise DataError(f"sample size {n} exceeds candidate pool of {len(pool)}")
    rng = np.random.default_rng(seed)
    chosen = sorted(rng.choice(len(pool), size=n, replace=False).tolist())
    kept = [corpus.records[pool[i]] for i in chosen]
    return corpus.replace(kept, provenance=f"{corpus.provenance} | sample n={n}")


def balance_undersample(corpus: Corpus, seed: int) -> Corpus:
    """Down-sample the majority class to the minority count, order-stable."""
    counts = corpus.class_counts()
    if min(counts.values()) == 0:
        raise DataError(f"cannot balance: class counts {dict(counts)}")
    minority = min(counts, key=lambda c: (counts[c], c))
    majority = Label.PHISHING if minority is Label.SAFE else Label.SAFE
    target = counts[minority]

    rng = np.random.default_rng(seed)
    major_positions = [i for i, r in enumerate(corpus) if r.label is majority]
    keep_major = set(
        major_positions[j]
        for j in rng.choice(len(major_positions), size=target, replace=False)
    )
    kept = [
        r
        for i, r in enumerate(corpus)
        if r.label is minority or i in keep_major
    ]
    return corpus.replace(kept, provenance=f"{corpus.provenance} | balance")


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def stratified_split(corpus: Corpus, ratio: float, seed: int) -> DatasetSplit:
    """Split into train/test with per-class shuffling and a per-class cut.

    The cut point per class is round-half-up(class_count * ratio) records
    into train; the remainder goes to test. Record order inside each side
    follows the original corpus order.
    """
    if not (0.0 < ratio < 1.0):
        raise DataError(f"split ratio must be in (0, 1), got {ratio}")
    counts = corpus.class_counts()
    if min(counts.values()) < 2:
        raise DataError(f"each class needs >=2 records to split: {dict(counts)}")

    rng = np.random.default_rng(seed)
    train_positions: set[int] = set()
    for label in (Label.SAFE, Label.PHISHING):
        positions = [i for i, r in enumerate(corpus) if r.label is label]
        order = rng.permutation(len(positions))
        n_train = _round_half_up(len(positions) * ratio)
        train_positions.update(positions[j] for j in order[:n_train])

    train = [r for i, r in enumerate(corpus) if i in train_positions]
    test = [r for i, r in enumerate(corpus) if i not in train_positions]
    return DatasetSplit(
        train=corpus.replace(train, provenance=f"{corpus.provenance} | train"),
        test=corpus.replace(test, provenance=f"{corpus.provenance} | test"),
        seed=seed,
        ratio=ratio,
    )
