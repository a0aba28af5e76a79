"""Masked-language-model pretraining on a one-sentence-per-line corpus."""

from __future__ import annotations

import random
from pathlib import Path

import torch
from torch import nn

from .data import read_corpus
from .modeling import Encoder, MlmModel
from .presets import PRESETS
from .vocab import SPECIALS, Vocab

MASK_PROB = 0.15
IGNORE = -100


def _mask_batch(ids: torch.Tensor, pad_mask: torch.Tensor, vocab: Vocab,
                generator: torch.Generator) -> tuple[torch.Tensor, torch.Tensor]:
    """Standard corruption: 15% of real tokens, 80/10/10 mask/random/keep."""
    targets = ids.clone()
    can_mask = ~pad_mask
    can_mask[:, 0] = False  # leave [CLS] alone
    roll = torch.rand(ids.shape, generator=generator)
    chosen = (roll < MASK_PROB) & can_mask
    targets[~chosen] = IGNORE

    corrupted = ids.clone()
    mode = torch.rand(ids.shape, generator=generator)
    corrupted[chosen & (mode < 0.8)] = vocab.mask_id
    random_ids = torch.randint(len(SPECIALS), len(vocab), ids.shape,
                               generator=generator)
    swap = chosen & (mode >= 0.8) & (mode < 0.9)
    corrupted[swap] = random_ids[swap]
    return corrupted, targets


def _pad(batch: list[list[int]], pad_id: int) -> tuple[torch.Tensor, torch.Tensor]:
    width = max(len(row) for row in batch)
    ids = torch.full((len(batch), width), pad_id, dtype=torch.long)
    for i, row in enumerate(batch):
        ids[i, : len(row)] = torch.tensor(row, dtype=torch.long)
    return ids, ids.eq(pad_id)


def pretrain_mlm(corpus_path: str | Path, out_path: str | Path,
                 preset: str = "tiny", seed: int = 0, epochs: int = 2,
                 batch_size: int = 64, lr: float = 3e-4, max_len: int = 32,
                 vocab_size: int = 8000) -> dict:
    """Train an MLM checkpoint; returns the loss history."""
    lines = read_corpus(corpus_path)
    if not lines:
        raise ValueError(f"empty corpus: {corpus_path}")
    vocab = Vocab.build(lines, max_size=vocab_size)
    encoded = [vocab.encode(line, max_len) for line in lines]

    torch.manual_seed(seed)
    generator = torch.Generator().manual_seed(seed + 1)
    order_rng = random.Random(seed + 2)
    model = MlmModel(Encoder(len(vocab), PRESETS[preset], max_len))
    optimizer = torch.optim.AdamW(model.parameters(), lr=lr)
    loss_fn = nn.CrossEntropyLoss(ignore_index=IGNORE)

    step_losses: list[float] = []
    model.train()
    for _ in range(epochs):
        order = list(range(len(encoded)))
        order_rng.shuffle(order)
        for at in range(0, len(order), batch_size):
            rows = [encoded[i] for i in order[at: at + batch_size]]
            ids, pad_mask = _pad(rows, vocab.pad_id)
            corrupted, targets = _mask_batch(ids, pad_mask, vocab, generator)
            if (targets != IGNORE).sum() == 0:
                continue
            logits = model(corrupted, pad_mask)
            loss = loss_fn(logits.view(-1, len(vocab)), targets.view(-1))
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
            step_losses.append(loss.item())

    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    history = {"steps": len(step_losses), "first_loss": step_losses[0],
               "final_loss": step_losses[-1], "losses": step_losses}
    torch.save({
        "encoder": model.encoder.state_dict(),
        "vocab": list(vocab.tokens),
        "preset": preset,
        "max_len": max_len,
        "seed": seed,
        "corpus": str(corpus_path),
        "history": {k: v for k, v in history.items() if k != "losses"},
    }, out_path)
    return history


def load_checkpoint(path: str | Path) -> dict:
    return torch.load(path, map_location="cpu", weights_only=True)
