"""Small transformer encoder with MLM and classification heads."""

from __future__ import annotations

import torch
from torch import nn

from .presets import ModelPreset


class Encoder(nn.Module):
    """Token + learned positional embeddings into a transformer encoder."""

    def __init__(self, vocab_size: int, preset: ModelPreset, max_len: int):
        super().__init__()
        self.vocab_size = vocab_size
        self.max_len = max_len
        self.token_emb = nn.Embedding(vocab_size, preset.dim, padding_idx=0)
        self.pos_emb = nn.Embedding(max_len, preset.dim)
        self.norm = nn.LayerNorm(preset.dim)
        self.dropout = nn.Dropout(0.1)
        layer = nn.TransformerEncoderLayer(
            d_model=preset.dim, nhead=preset.heads,
            dim_feedforward=4 * preset.dim, dropout=0.1, activation="gelu",
            batch_first=True)
        self.layers = nn.TransformerEncoder(layer, num_layers=preset.layers)

    def forward(self, ids: torch.Tensor, pad_mask: torch.Tensor) -> torch.Tensor:
        positions = torch.arange(ids.size(1), device=ids.device)
        h = self.token_emb(ids) + self.pos_emb(positions)[None, :, :]
        h = self.dropout(self.norm(h))
        return self.layers(h, src_key_padding_mask=pad_mask)

    def grow_vocab(self, new_vocab_size: int) -> None:
        """Append freshly initialized embedding rows for new tokens."""
        if new_vocab_size < self.vocab_size:
            raise ValueError("vocabulary can only grow")
        if new_vocab_size == self.vocab_size:
            return
        old = self.token_emb
        grown = nn.Embedding(new_vocab_size, old.embedding_dim, padding_idx=0)
        nn.init.normal_(grown.weight, std=0.02)
        with torch.no_grad():
            grown.weight[: self.vocab_size] = old.weight
            grown.weight[0].zero_()
        self.token_emb = grown
        self.vocab_size = new_vocab_size


class MlmModel(nn.Module):
    def __init__(self, encoder: Encoder):
        super().__init__()
        self.encoder = encoder
        self.lm_head = nn.Linear(encoder.token_emb.embedding_dim,
                                 encoder.vocab_size)

    def forward(self, ids, pad_mask):
        return self.lm_head(self.encoder(ids, pad_mask))


class Classifier(nn.Module):
    """Fully connected layer on the pooled first-token representation."""

    def __init__(self, encoder: Encoder, n_classes: int):
        super().__init__()
        self.encoder = encoder
        self.head = nn.Linear(encoder.token_emb.embedding_dim, n_classes)

    def forward(self, ids, pad_mask):
        hidden = self.encoder(ids, pad_mask)
        return self.head(hidden[:, 0])
