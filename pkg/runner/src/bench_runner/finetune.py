"""Fine-tune an encoder on one (task, size, run) cell and write predictions."""

from __future__ import annotations

import random
from pathlib import Path

import torch
from torch import nn

from .data import label_space_size, load_split, write_predictions
from .modeling import Classifier, Encoder
from .presets import PRESETS, RunDescriptor
from .pretrain import _pad, load_checkpoint
from .sampling import subsample, subsample_seed
from .vocab import Vocab


def default_epochs(train_size: int) -> int:
    # Keep total optimizer steps in a comparable band across sizes.
    return max(4, min(40, round(25_600 / train_size)))


def _build_model(descriptor: RunDescriptor, train_texts: list[str],
                 needed_len: int, n_classes: int) -> tuple[Classifier, Vocab, int]:
    if descriptor.init == "pretrained-checkpoint":
        if not Path(descriptor.checkpoint).exists():
            raise FileNotFoundError(f"missing checkpoint: {descriptor.checkpoint}")
        ckpt = load_checkpoint(descriptor.checkpoint)
        if ckpt["preset"] != descriptor.preset:
            raise ValueError(
                f"checkpoint preset {ckpt['preset']!r} != descriptor "
                f"preset {descriptor.preset!r}")
        base_vocab = Vocab(tuple(ckpt["vocab"]))
        encoder = Encoder(len(base_vocab), PRESETS[descriptor.preset],
                          ckpt["max_len"])
        encoder.load_state_dict(ckpt["encoder"])
        vocab = base_vocab.extend(train_texts)
        encoder.grow_vocab(len(vocab))
        max_len = ckpt["max_len"]
    else:
        vocab = Vocab.build(train_texts)
        max_len = min(needed_len, 64)
        encoder = Encoder(len(vocab), PRESETS[descriptor.preset], max_len)
    return Classifier(encoder, n_classes), vocab, max_len


def finetune_and_predict(descriptor: RunDescriptor, dataset_root: str | Path,
                         out_path: str | Path | None = None,
                         batch_size: int = 32, lr: float = 3e-4) -> dict:
    """Train on the cell's subsample, predict the test split, write the TSV."""
    task_dir = Path(dataset_root) / descriptor.task
    train = load_split(task_dir, "train")
    test = load_split(task_dir, "test")
    n_classes = label_space_size(task_dir)
    subset = subsample(train, descriptor.task, descriptor.size, descriptor.run,
                       descriptor.base_seed)

    run_seed = subsample_seed(descriptor.base_seed,
                              f"train:{descriptor.task}:{descriptor.init}",
                              descriptor.size, descriptor.run)
    torch.manual_seed(run_seed)
    order_rng = random.Random(run_seed + 1)

    needed_len = 1 + max(len(r.text.split()) for r in (*train, *test))
    model, vocab, max_len = _build_model(
        descriptor, [r.text for r in train], needed_len, n_classes)
    bad = [r.label for r in subset if r.label >= n_classes]
    if bad:
        raise ValueError(f"labels {sorted(set(bad))} outside 0..{n_classes - 1}")

    encoded = [(vocab.encode(r.text, max_len), r.label) for r in subset]
    optimizer = torch.optim.AdamW(model.parameters(), lr=lr)
    loss_fn = nn.CrossEntropyLoss()
    epochs = descriptor.epochs or default_epochs(len(subset))

    model.train()
    steps = 0
    last_loss = float("nan")
    for _ in range(epochs):
        order = list(range(len(encoded)))
        order_rng.shuffle(order)
        for at in range(0, len(order), batch_size):
            rows = [encoded[i] for i in order[at: at + batch_size]]
            ids, pad_mask = _pad([r[0] for r in rows], vocab.pad_id)
            labels = torch.tensor([r[1] for r in rows], dtype=torch.long)
            loss = loss_fn(model(ids, pad_mask), labels)
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
            steps += 1
            last_loss = loss.item()

    model.eval()
    predictions: list[int] = []
    with torch.no_grad():
        for at in range(0, len(test), 256):
            rows = [vocab.encode(r.text, max_len) for r in test[at: at + 256]]
            ids, pad_mask = _pad(rows, vocab.pad_id)
            predictions.extend(model(ids, pad_mask).argmax(dim=1).tolist())

    if out_path is not None:
        write_predictions(predictions, out_path)
    correct = sum(p == r.label for p, r in zip(predictions, test))
    return {
        "descriptor": descriptor.to_json(),
        "steps": steps,
        "epochs": epochs,
        "final_loss": last_loss,
        "test_accuracy": correct / len(test),
        "predictions": predictions,
        "out_path": None if out_path is None else str(out_path),
    }
