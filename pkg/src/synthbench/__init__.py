"""Procedural benchmark toolkit: 19 symbolic classification tasks, synthetic
pretraining corpora, and a learning-curve / significance evaluation harness.
"""

from .dispatch import (generate_example, label_for_input, oracle_label,
                       parse_payload, render_example)
from .model import (Example, SweepPlan, TaskId, TaskSpec, parse_example,
                    subsample_training_set, sweep_plan, task_spec)

__version__ = "0.1.0"

__all__ = [
    "Example",
    "SweepPlan",
    "TaskId",
    "TaskSpec",
    "generate_example",
    "label_for_input",
    "oracle_label",
    "parse_example",
    "parse_payload",
    "render_example",
    "subsample_training_set",
    "sweep_plan",
    "task_spec",
    "__version__",
]
