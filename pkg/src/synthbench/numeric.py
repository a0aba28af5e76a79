"""Quantitative-computation tasks: parity queries, two-operand arithmetic,
and set statistics (mean / median / mode).

Every generator draws operands uniformly from the task's stated ranges,
restricted to the oracle constraints. Where the constraint set has product
structure (a - b = k, a = b * k) the draw is parameterized directly, which
is equal in law to rejection sampling over the box; everything else uses
plain rejection with a hard attempt budget.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .model import Example, RangeError, TaskId
from .numwords import number_to_words, words_to_number

OPERAND_MIN, OPERAND_MAX = 1, 10_000
PARITY_N_MIN, PARITY_N_MAX = 1, 20_000
SET_VALUE_MIN, SET_VALUE_MAX = -15, 15
MODE_VALUE_MIN, MODE_VALUE_MAX = 0, 9
SET_LEN_MIN, SET_LEN_MAX = 5, 15
MEDIAN_LENGTHS = (5, 7, 9, 11, 13, 15)

MAX_ATTEMPTS = 10 ** 6

_OP_SURFACE = {"subtract": "-", "divide": "/"}
_SURFACE_OP = {v: k for k, v in _OP_SURFACE.items()}


class ConstraintError(ValueError):
    """A payload violates an oracle-side constraint (resample to fix)."""


class GenerationError(RuntimeError):
    """The rejection budget ran out; the message names the constraint."""


@dataclass(frozen=True)
class ArithmeticInstance:
    a: int
    b: int
    op: str  # "subtract" | "divide"
    a_notation: str = "decimal"  # "decimal" | "word"
    b_notation: str = "decimal"


@dataclass(frozen=True)
class NumberSet:
    values: tuple[int, ...]
    statistic: str  # "mean" | "median" | "mode"


@dataclass(frozen=True)
class ParityQuery:
    n: int
    variant: str  # "odd" | "even" | "odd_even"
    claim: str | None = None  # "odd"/"even", odd_even only


def _check_parity(q: ParityQuery) -> None:
    if not PARITY_N_MIN <= q.n <= PARITY_N_MAX:
        raise RangeError(f"n={q.n} outside [{PARITY_N_MIN}, {PARITY_N_MAX}]")
    if (q.claim is not None) != (q.variant == "odd_even"):
        raise ConstraintError("claim is present iff the variant is odd_even")
    if q.claim is not None and q.claim not in ("odd", "even"):
        raise ConstraintError(f"claim must be 'odd' or 'even', got {q.claim!r}")


def _check_arithmetic(inst: ArithmeticInstance) -> None:
    for v in (inst.a, inst.b):
        if not OPERAND_MIN <= v <= OPERAND_MAX:
            raise RangeError(f"operand {v} outside [{OPERAND_MIN}, {OPERAND_MAX}]")
    if inst.op not in _OP_SURFACE:
        raise ConstraintError(f"unknown operator {inst.op!r}")


def _check_number_set(ns: NumberSet) -> None:
    lo, hi = ((MODE_VALUE_MIN, MODE_VALUE_MAX) if ns.statistic == "mode"
              else (SET_VALUE_MIN, SET_VALUE_MAX))
    for v in ns.values:
        if not lo <= v <= hi:
            raise RangeError(f"set value {v} outside [{lo}, {hi}]")
    if not ns.values:
        raise ConstraintError("empty number set")


def oracle_numeric(task: TaskId, payload) -> int:
    """Exact label for a numeric payload.

    Raises ConstraintError for payloads no generated instance may contain:
    a non-integer or out-of-range mean, an even-length median list, a tied
    mode.
    """
    if task in (TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN):
        _check_parity(payload)
        if task is TaskId.ODD:
            return payload.n % 2
        if task is TaskId.EVEN:
            return 1 - payload.n % 2
        actual = "odd" if payload.n % 2 else "even"
        return int(actual == payload.claim)

    if task in (TaskId.DECIMAL_OP, TaskId.DECIMAL_WORD_OP):
        _check_arithmetic(payload)
        if payload.op == "subtract":
            result = payload.a - payload.b
        else:
            if payload.a % payload.b:
                raise ConstraintError(f"{payload.a} / {payload.b} is not exact")
            result = payload.a // payload.b
        if not 0 <= result <= 9:
            raise ConstraintError(f"result {result} outside the 0..9 label space")
        return result

    if task in (TaskId.MEAN, TaskId.MEDIAN, TaskId.MODE):
        _check_number_set(payload)
        values = payload.values
        if task is TaskId.MEAN:
            total = sum(values)
            if total % len(values):
                raise ConstraintError("mean is not an integer")
            result = total // len(values)
        elif task is TaskId.MEDIAN:
            if len(values) % 2 == 0:
                raise ConstraintError("median list must have odd length")
            result = sorted(values)[len(values) // 2]
        else:
            counts = Counter(values).most_common()
            if len(counts) > 1 and counts[0][1] == counts[1][1]:
                raise ConstraintError("mode is tied")
            result = counts[0][0]
        if not 0 <= result <= 9:
            raise ConstraintError(f"statistic {result} outside the 0..9 label space")
        return result

    raise ValueError(f"{task} is not a numeric task")


# ---------------------------------------------------------------------------
# Rendering / parsing
# ---------------------------------------------------------------------------


def _render_operand(value: int, notation: str) -> str:
    return number_to_words(value) if notation == "word" else str(value)


def render_numeric(task: TaskId, payload) -> str:
    if task in (TaskId.ODD, TaskId.EVEN):
        _check_parity(payload)
        return str(payload.n)
    if task is TaskId.ODD_EVEN:
        _check_parity(payload)
        return f"{payload.n} {payload.claim}"
    if task in (TaskId.DECIMAL_OP, TaskId.DECIMAL_WORD_OP):
        _check_arithmetic(payload)
        lhs = _render_operand(payload.a, payload.a_notation)
        rhs = _render_operand(payload.b, payload.b_notation)
        return f"{lhs} {_OP_SURFACE[payload.op]} {rhs}"
    if task in (TaskId.MEAN, TaskId.MEDIAN, TaskId.MODE):
        _check_number_set(payload)
        return ",".join(str(v) for v in payload.values) + " ?"
    raise ValueError(f"{task} is not a numeric task")


def _parse_operand(tokens: list[str]) -> tuple[int, str]:
    text = " ".join(tokens)
    if len(tokens) == 1 and tokens[0].lstrip("-").isdigit():
        return int(tokens[0]), "decimal"
    return words_to_number(text), "word"


def parse_numeric_payload(task: TaskId, text: str):
    if task in (TaskId.ODD, TaskId.EVEN):
        return ParityQuery(n=int(text), variant=task.value)
    if task is TaskId.ODD_EVEN:
        n_str, claim = text.split(" ")
        return ParityQuery(n=int(n_str), variant="odd_even", claim=claim)
    if task in (TaskId.DECIMAL_OP, TaskId.DECIMAL_WORD_OP):
        tokens = text.split(" ")
        op_positions = [i for i, t in enumerate(tokens) if t in _SURFACE_OP]
        if len(op_positions) != 1:
            raise ValueError(f"expected exactly one operator token in {text!r}")
        i = op_positions[0]
        a, a_notation = _parse_operand(tokens[:i])
        b, b_notation = _parse_operand(tokens[i + 1:])
        return ArithmeticInstance(a=a, b=b, op=_SURFACE_OP[tokens[i]],
                                  a_notation=a_notation, b_notation=b_notation)
    if task in (TaskId.MEAN, TaskId.MEDIAN, TaskId.MODE):
        body = text.removesuffix(" ?")
        values = tuple(int(v) for v in body.split(","))
        return NumberSet(values=values, statistic=task.value)
    raise ValueError(f"{task} is not a numeric task")


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

_SET_VALUES = range(SET_VALUE_MIN, SET_VALUE_MAX + 1)
_MODE_VALUES = range(MODE_VALUE_MIN, MODE_VALUE_MAX + 1)


def _gen_parity(task: TaskId, target: int, rng: random.Random) -> ParityQuery:
    for _ in range(MAX_ATTEMPTS):
        n = rng.randint(PARITY_N_MIN, PARITY_N_MAX)
        if task is TaskId.ODD_EVEN:
            actual = "odd" if n % 2 else "even"
            claim = actual if target == 1 else ("even" if actual == "odd" else "odd")
            return ParityQuery(n=n, variant="odd_even", claim=claim)
        wants_odd = (task is TaskId.ODD) == (target == 1)
        if n % 2 == int(wants_odd):
            return ParityQuery(n=n, variant=task.value)
    raise GenerationError(f"{task}: no n with the requested parity")


def _gen_arithmetic(task: TaskId, target: int, rng: random.Random) -> ArithmeticInstance:
    # Label 0 is reachable only through subtraction (quotients are >= 1).
    op = "subtract" if target == 0 else rng.choice(("subtract", "divide"))
    if op == "subtract":
        b = rng.randint(OPERAND_MIN, OPERAND_MAX - target)
        a = b + target
    else:
        b = rng.randint(OPERAND_MIN, OPERAND_MAX // target)
        a = b * target
    if task is TaskId.DECIMAL_WORD_OP:
        a_notation = rng.choice(("decimal", "word"))
        b_notation = rng.choice(("decimal", "word"))
    else:
        a_notation = b_notation = "decimal"
    return ArithmeticInstance(a=a, b=b, op=op,
                              a_notation=a_notation, b_notation=b_notation)


def _gen_mean(target: int, rng: random.Random) -> NumberSet:
    length = rng.randint(SET_LEN_MIN, SET_LEN_MAX)
    for _ in range(MAX_ATTEMPTS):
        head = rng.choices(_SET_VALUES, k=length - 1)
        tail = target * length - sum(head)
        if SET_VALUE_MIN <= tail <= SET_VALUE_MAX:
            return NumberSet(values=tuple(head) + (tail,), statistic="mean")
    raise GenerationError(f"mean: no integer-mean list with mean {target}")


def _gen_median(target: int, rng: random.Random) -> NumberSet:
    length = rng.choice(MEDIAN_LENGTHS)
    mid = length // 2
    for _ in range(MAX_ATTEMPTS):
        values = rng.choices(_SET_VALUES, k=length)
        if sorted(values)[mid] == target:
            return NumberSet(values=tuple(values), statistic="median")
    raise GenerationError(f"median: no odd-length list with median {target}")


def _gen_mode(target: int, rng: random.Random) -> NumberSet:
    length = rng.randint(SET_LEN_MIN, SET_LEN_MAX)
    for _ in range(MAX_ATTEMPTS):
        values = rng.choices(_MODE_VALUES, k=length)
        counts = Counter(values).most_common(2)
        if counts[0][0] == target and (len(counts) == 1 or counts[0][1] > counts[1][1]):
            return NumberSet(values=tuple(values), statistic="mode")
    raise GenerationError(f"mode: no list with unique mode {target}")


def gen_numeric_payload(task: TaskId, target: int, rng: random.Random):
    if task in (TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN):
        return _gen_parity(task, target, rng)
    if task in (TaskId.DECIMAL_OP, TaskId.DECIMAL_WORD_OP):
        return _gen_arithmetic(task, target, rng)
    if task is TaskId.MEAN:
        return _gen_mean(target, rng)
    if task is TaskId.MEDIAN:
        return _gen_median(target, rng)
    if task is TaskId.MODE:
        return _gen_mode(target, rng)
    raise ValueError(f"{task} is not a numeric task")


def gen_numeric_example(task: TaskId, target: int, rng: random.Random) -> Example:
    payload = gen_numeric_payload(task, target, rng)
    label = oracle_numeric(task, payload)
    assert label == target, f"constructed label {label} != target {target}"
    return Example(render_numeric(task, payload), label)
