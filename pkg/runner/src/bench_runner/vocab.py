"""Whitespace-token vocabulary with the usual special tokens.

Desk-scale models use the data's own token inventory instead of subwords;
a pretrained checkpoint's vocabulary can be extended in place with unseen
task tokens (their embedding rows start fresh while everything else
transfers).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

PAD, UNK, CLS, MASK = "[PAD]", "[UNK]", "[CLS]", "[MASK]"
SPECIALS = (PAD, UNK, CLS, MASK)


@dataclass(frozen=True)
class Vocab:
    tokens: tuple[str, ...]

    def __post_init__(self):
        if self.tokens[: len(SPECIALS)] != SPECIALS:
            raise ValueError("vocabulary must start with the special tokens")
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.tokens)})

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def pad_id(self) -> int:
        return 0

    @property
    def unk_id(self) -> int:
        return 1

    @property
    def cls_id(self) -> int:
        return 2

    @property
    def mask_id(self) -> int:
        return 3

    @classmethod
    def build(cls, lines: Iterable[str], max_size: int | None = None) -> "Vocab":
        counts = Counter()
        for line in lines:
            counts.update(line.split())
        ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        if max_size is not None:
            ranked = ranked[: max(0, max_size - len(SPECIALS))]
        return cls(SPECIALS + tuple(w for w, _ in ranked))

    def extend(self, lines: Iterable[str]) -> "Vocab":
        """Same vocabulary plus any unseen tokens, appended in sorted order."""
        index = self._index
        new = sorted({t for line in lines for t in line.split() if t not in index})
        return Vocab(self.tokens + tuple(new)) if new else self

    def encode(self, line: str, max_len: int) -> list[int]:
        """[CLS] + token ids, truncated to max_len (no padding here)."""
        index = self._index
        ids = [self.cls_id]
        for token in line.split():
            ids.append(index.get(token, self.unk_id))
        return ids[:max_len]
