"""Synthetic pretraining corpora and order perturbations.

Corpora are plain text, one sentence per line, UTF-8, LF. Synthesis kinds:
``zipf`` (unigram mass proportional to 1/(rank + beta)**alpha over a finite
ranked vocabulary), ``uniform`` (equal mass), and ``synthetic_vocab``
(uniform over all 17,576 three-letter lowercase words). Perturbation kinds
rewrite an existing corpus line by line: ``perturb_sort`` orders each
sentence's tokens lexicographically and ``perturb_shuffle`` applies a
seeded uniform permutation; both preserve each line's token multiset.
``passthrough`` re-emits the normalized source.

Every sentence draws from its own stream derived from (seed, line index),
so line-parallel workers would produce the same corpus as a sequential
pass.
"""

from __future__ import annotations

import itertools
import json
import string
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .seeds import derive_stream

VOCAB_SIZE = 30_000
SYNTHETIC_WORD_LENGTH = 3
DEFAULT_SENTENCE_LENGTH_RANGE = (5, 30)
DEFAULT_SENTENCE_COUNT = 500_000

SYNTHESIS_KINDS = ("zipf", "uniform", "synthetic_vocab")
PERTURBATION_KINDS = ("perturb_sort", "perturb_shuffle", "passthrough")


@dataclass(frozen=True)
class Vocabulary:
    """Ranked word types, most frequent first (rank 1 = index 0)."""

    words: tuple[str, ...]
    counts: tuple[int, ...]
    underfilled: bool = False  # warning flag: source had fewer types than asked

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class ZipfConfig:
    alpha: float = 1.0
    beta: float = 2.7
    vocab_size: int = VOCAB_SIZE

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta < 0:
            raise ValueError("beta must be nonnegative")

    def weights(self) -> list[float]:
        return [(r + self.beta) ** -self.alpha
                for r in range(1, self.vocab_size + 1)]


@dataclass(frozen=True)
class CorpusRecipe:
    kind: str
    sentence_count: int = DEFAULT_SENTENCE_COUNT
    sentence_length_range: tuple[int, int] = DEFAULT_SENTENCE_LENGTH_RANGE
    seed: int = 0
    source: str | None = None  # corpus to perturb, or text to build a vocab from
    vocab_size: int = VOCAB_SIZE
    alpha: float = 1.0
    beta: float = 2.7
    lowercase: bool = True

    def __post_init__(self):
        if self.kind not in SYNTHESIS_KINDS + PERTURBATION_KINDS:
            raise ValueError(f"unknown corpus kind: {self.kind!r}")
        if self.kind in PERTURBATION_KINDS and not self.source:
            raise ValueError(f"{self.kind} requires a source corpus")
        lo, hi = self.sentence_length_range
        if not 1 <= lo <= hi:
            raise ValueError(f"bad sentence_length_range {self.sentence_length_range}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "sentence_count": self.sentence_count,
            "sentence_length_range": list(self.sentence_length_range),
            "seed": self.seed,
            "source": self.source,
            "vocab_size": self.vocab_size,
            "alpha": self.alpha,
            "beta": self.beta,
            "lowercase": self.lowercase,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusRecipe":
        known = {f: obj[f] for f in cls.__dataclass_fields__ if f in obj}
        if "sentence_length_range" in known:
            known["sentence_length_range"] = tuple(known["sentence_length_range"])
        return cls(**known)


def read_recipe(path: Path | str) -> CorpusRecipe:
    return CorpusRecipe.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


# ---------------------------------------------------------------------------
# Vocabulary
# ---------------------------------------------------------------------------


def build_vocab(lines: Iterable[str], size: int = VOCAB_SIZE) -> Vocabulary:
    """Top-`size` whitespace token types by count; ties break lexicographically."""
    counts = Counter()
    for line in lines:
        counts.update(line.split())
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:size]
    return Vocabulary(words=tuple(w for w, _ in ranked),
                      counts=tuple(c for _, c in ranked),
                      underfilled=len(counts) < size)


def synthetic_vocabulary(word_length: int = SYNTHETIC_WORD_LENGTH) -> Vocabulary:
    words = tuple("".join(chars) for chars in
                  itertools.product(string.ascii_lowercase, repeat=word_length))
    return Vocabulary(words=words, counts=(0,) * len(words))


# ---------------------------------------------------------------------------
# Synthesis
# ---------------------------------------------------------------------------


def _synth_lines(words: tuple[str, ...], cum_weights: list[float] | None,
                 recipe: CorpusRecipe) -> Iterator[str]:
    lo, hi = recipe.sentence_length_range
    for i in range(recipe.sentence_count):
        rng = derive_stream(recipe.seed, "sentence", i)
        k = rng.randint(lo, hi)
        yield " ".join(rng.choices(words, cum_weights=cum_weights, k=k))


def sample_zipf_corpus(vocab: Vocabulary, cfg: ZipfConfig,
                       recipe: CorpusRecipe) -> Iterator[str]:
    if cfg.vocab_size != len(vocab):
        cfg = ZipfConfig(alpha=cfg.alpha, beta=cfg.beta, vocab_size=len(vocab))
    cum_weights = list(itertools.accumulate(cfg.weights()))
    return _synth_lines(vocab.words, cum_weights, recipe)


def sample_uniform_corpus(vocab: Vocabulary, recipe: CorpusRecipe) -> Iterator[str]:
    return _synth_lines(vocab.words, None, recipe)


def gen_synthetic_vocab_corpus(recipe: CorpusRecipe) -> Iterator[str]:
    return _synth_lines(synthetic_vocabulary().words, None, recipe)


# ---------------------------------------------------------------------------
# Perturbation / ingestion
# ---------------------------------------------------------------------------


def perturb_sort(lines: Iterable[str]) -> Iterator[str]:
    for line in lines:
        yield " ".join(sorted(line.split()))


def perturb_shuffle(lines: Iterable[str], seed: int) -> Iterator[str]:
    for i, line in enumerate(lines):
        tokens = line.split()
        derive_stream(seed, "shuffle", i).shuffle(tokens)
        yield " ".join(tokens)


@dataclass(frozen=True)
class IngestReport:
    sentences: int
    tokens: int
    types: int
    empty: bool


def ingest_text(path: Path | str, lowercase: bool = True) -> tuple[list[str], IngestReport]:
    """Normalize a line-segmented text file: whitespace tokens, single spaces.

    Keeps one output sentence per input line (idempotent on its own output).
    """
    raw = Path(path).read_text(encoding="utf-8")
    lines = raw.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    out, types, n_tokens = [], set(), 0
    for line in lines:
        tokens = line.lower().split() if lowercase else line.split()
        types.update(tokens)
        n_tokens += len(tokens)
        out.append(" ".join(tokens))
    return out, IngestReport(sentences=len(out), tokens=n_tokens,
                             types=len(types), empty=not out)


# ---------------------------------------------------------------------------
# Writing + summary statistics
# ---------------------------------------------------------------------------

SLOPE_RANK_RANGE = (10, 1000)
MIN_SLOPE_POINTS = 50


def zipf_slope(type_counts: Counter, rank_range=SLOPE_RANK_RANGE) -> float | None:
    """Least-squares slope of log10 frequency vs log10 observed rank."""
    freqs = sorted(type_counts.values(), reverse=True)
    lo, hi = rank_range
    window = [(r, f) for r, f in enumerate(freqs[lo - 1:hi], start=lo) if f > 0]
    if len(window) < MIN_SLOPE_POINTS:
        return None
    x = np.log10([r for r, _ in window])
    y = np.log10([f for _, f in window])
    return float(np.polyfit(x, y, 1)[0])


def corpus_stats(type_counts: Counter, sentences: int) -> dict:
    return {
        "sentences": sentences,
        "tokens": sum(type_counts.values()),
        "types": len(type_counts),
        "zipf_slope": zipf_slope(type_counts),
    }


def write_corpus(lines: Iterable[str], path: Path | str,
                 recipe: CorpusRecipe | None = None) -> dict:
    """Stream lines to `path`, write a `.stats.json` sidecar, return stats."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    counts: Counter = Counter()
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            counts.update(line.split())
            fh.write(line)
            fh.write("\n")
            n += 1
    stats = corpus_stats(counts, n)
    if recipe is not None:
        stats["recipe"] = recipe.to_json()
    sidecar = path.with_name(path.name + ".stats.json")
    sidecar.write_text(json.dumps(stats, indent=2) + "\n", encoding="utf-8")
    return stats


def run_recipe(recipe: CorpusRecipe, out_path: Path | str) -> dict:
    """Materialize a recipe to disk (synthesis or perturbation)."""
    if recipe.kind in PERTURBATION_KINDS:
        lines, _ = ingest_text(recipe.source, lowercase=recipe.lowercase)
        if recipe.kind == "perturb_sort":
            lines = perturb_sort(lines)
        elif recipe.kind == "perturb_shuffle":
            lines = perturb_shuffle(lines, recipe.seed)
        return write_corpus(lines, out_path, recipe)
    if recipe.kind == "synthetic_vocab":
        return write_corpus(gen_synthetic_vocab_corpus(recipe), out_path, recipe)
    if recipe.source:
        vocab = build_vocab(ingest_text(recipe.source, lowercase=recipe.lowercase)[0],
                            size=recipe.vocab_size)
    else:
        raise ValueError(f"{recipe.kind} needs a source text to build its vocabulary")
    if recipe.kind == "zipf":
        cfg = ZipfConfig(alpha=recipe.alpha, beta=recipe.beta, vocab_size=len(vocab))
        return write_corpus(sample_zipf_corpus(vocab, cfg, recipe), out_path, recipe)
    return write_corpus(sample_uniform_corpus(vocab, recipe), out_path, recipe)
