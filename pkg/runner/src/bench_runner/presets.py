"""Model size grid and run descriptors."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ModelPreset:
    name: str
    layers: int
    heads: int
    dim: int
    params_tag: str


# Encoder size grid, largest to smallest, plus a desk-scale preset for CPU runs.
PRESETS: dict[str, ModelPreset] = {p.name: p for p in (
    ModelPreset("base", layers=12, heads=12, dim=768, params_tag="110M"),
    ModelPreset("medium", layers=8, heads=8, dim=512, params_tag="42M"),
    ModelPreset("small", layers=4, heads=8, dim=512, params_tag="29M"),
    ModelPreset("mini", layers=4, heads=4, dim=256, params_tag="11M"),
    ModelPreset("micro", layers=2, heads=2, dim=128, params_tag="4M"),
    ModelPreset("tiny", layers=2, heads=2, dim=64, params_tag="desk"),
)}

INITS = ("pretrained-checkpoint", "random")


@dataclass(frozen=True)
class RunDescriptor:
    """One fine-tuning cell: (task, size, run) under a preset and init."""

    task: str
    size: int
    run: int
    preset: str = "tiny"
    init: str = "random"
    checkpoint: str | None = None  # required when init is pretrained-checkpoint
    base_seed: int = 0
    epochs: int | None = None  # None: scaled from the training size

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise ValueError(f"unknown preset {self.preset!r}; have {sorted(PRESETS)}")
        if self.init not in INITS:
            raise ValueError(f"init must be one of {INITS}, got {self.init!r}")
        if self.init == "pretrained-checkpoint" and not self.checkpoint:
            raise ValueError("pretrained-checkpoint init requires a checkpoint path")

    def cell_path(self) -> str:
        """Relative prediction path; distinct descriptors never collide."""
        return f"{self.task}/{self.preset}-{self.init}/size{self.size}_run{self.run}.tsv"

    def to_json(self) -> dict:
        return {"task": self.task, "size": self.size, "run": self.run,
                "preset": self.preset, "init": self.init,
                "checkpoint": self.checkpoint, "base_seed": self.base_seed,
                "epochs": self.epochs}

    @classmethod
    def from_json(cls, obj: dict) -> "RunDescriptor":
        return cls(**{k: obj[k] for k in cls.__dataclass_fields__ if k in obj})
