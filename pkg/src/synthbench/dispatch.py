"""Task-family routing: one entry point per operation, any task."""

from __future__ import annotations

import random

from .model import Example, NUMERIC_TASKS, REGEX_TASKS, TaskId
from .numeric import (gen_numeric_example, oracle_numeric,
                      parse_numeric_payload, render_numeric)
from .regular import (gen_regex_example, oracle_regex, parse_regex_payload,
                      render_regex)
from .strings import (gen_string_example, oracle_string, parse_string_payload,
                      render_string)


def oracle_label(task: TaskId, payload) -> int:
    task = TaskId(task)
    if task in NUMERIC_TASKS:
        return oracle_numeric(task, payload)
    if task in REGEX_TASKS:
        return oracle_regex(task, payload)
    return oracle_string(task, payload)


def render_example(task: TaskId, payload) -> Example:
    """Render a task-native payload into its surface form, label attached."""
    task = TaskId(task)
    if task in NUMERIC_TASKS:
        text = render_numeric(task, payload)
    elif task in REGEX_TASKS:
        text = render_regex(task, payload)
    else:
        text = render_string(task, payload)
    return Example(text, oracle_label(task, payload))


def parse_payload(task: TaskId, text: str):
    """Recover the task-native payload from a rendered input string."""
    task = TaskId(task)
    if task in NUMERIC_TASKS:
        return parse_numeric_payload(task, text)
    if task in REGEX_TASKS:
        return parse_regex_payload(task, text)
    return parse_string_payload(task, text)


def label_for_input(task: TaskId, text: str) -> int:
    return oracle_label(task, parse_payload(task, text))


def generate_example(task: TaskId, target_label: int, rng: random.Random) -> Example:
    """One fresh example whose oracle label equals ``target_label``."""
    task = TaskId(task)
    if task in NUMERIC_TASKS:
        return gen_numeric_example(task, target_label, rng)
    if task in REGEX_TASKS:
        return gen_regex_example(task, target_label, rng)
    return gen_string_example(task, target_label, rng)
