"""Thin neural adapter: pretrain small transformer encoders on corpus files
and fine-tune them on benchmark dataset trees, writing prediction TSVs back
for external scoring. Talks to the generator toolkit only through its files
(dataset JSONL/TSV + manifests in, `index<TAB>label` predictions out).
"""

from .presets import PRESETS, ModelPreset, RunDescriptor

__version__ = "0.1.0"

__all__ = ["PRESETS", "ModelPreset", "RunDescriptor", "__version__"]
