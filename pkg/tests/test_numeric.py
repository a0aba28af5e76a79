import random
from collections import Counter

import pytest
import scipy.stats
from hypothesis import given, settings, strategies as st

from synthbench import generate_example, label_for_input, parse_payload, render_example
from synthbench.model import RangeError, TaskId
from synthbench.numeric import (ArithmeticInstance, ConstraintError, NumberSet,
                                ParityQuery, oracle_numeric)

from oracles import brute_label

NUMERIC = [TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN, TaskId.DECIMAL_OP,
           TaskId.DECIMAL_WORD_OP, TaskId.MEAN, TaskId.MEDIAN, TaskId.MODE]


# --- oracle fixtures ---------------------------------------------------------


def test_oracle_table_rows():
    assert oracle_numeric(TaskId.ODD, ParityQuery(4210, "odd")) == 0
    assert oracle_numeric(TaskId.EVEN, ParityQuery(4210, "even")) == 1
    assert oracle_numeric(
        TaskId.ODD_EVEN, ParityQuery(4210, "odd_even", claim="even")) == 1
    assert oracle_numeric(
        TaskId.DECIMAL_OP, ArithmeticInstance(872, 436, "divide")) == 2
    assert oracle_numeric(
        TaskId.MEAN, NumberSet((15, -8, 15, -5, -14, -3), "mean")) == 0
    # 7th of the 13 sorted values
    median_values = (3, 6, 5, 15, 2, 3, -6, -2, 9, -3, -9, -5, -14)
    assert sorted(median_values)[6] == 2
    assert oracle_numeric(TaskId.MEDIAN, NumberSet(median_values, "median")) == 2
    assert oracle_numeric(
        TaskId.MODE, NumberSet((5, 9, 7, 0, 2, 5, 3, 3, 3, 0), "mode")) == 3


def test_oracle_constraint_errors():
    with pytest.raises(ConstraintError):
        oracle_numeric(TaskId.MEAN, NumberSet((1, 2), "mean"))  # mean 1.5
    with pytest.raises(ConstraintError):
        oracle_numeric(TaskId.MEDIAN, NumberSet((1, 2, 3, 4), "median"))
    with pytest.raises(ConstraintError):
        oracle_numeric(TaskId.MODE, NumberSet((1, 1, 2, 2, 3), "mode"))
    with pytest.raises(ConstraintError):
        oracle_numeric(TaskId.DECIMAL_OP, ArithmeticInstance(7, 2, "divide"))


def test_oracle_range_errors():
    with pytest.raises(RangeError):
        oracle_numeric(TaskId.ODD, ParityQuery(0, "odd"))
    with pytest.raises(RangeError):
        oracle_numeric(TaskId.DECIMAL_OP, ArithmeticInstance(10_001, 1, "subtract"))
    with pytest.raises(RangeError):
        oracle_numeric(TaskId.MEAN, NumberSet((16,), "mean"))


# --- rendering ----------------------------------------------------------------


def test_render_table_formats():
    assert render_example(
        TaskId.MEAN, NumberSet((15, -8, 15, -5, -14, -3), "mean")).input == \
        "15,-8,15,-5,-14,-3 ?"
    assert render_example(TaskId.ODD, ParityQuery(4210, "odd")).input == "4210"
    assert render_example(
        TaskId.ODD_EVEN, ParityQuery(4210, "odd_even", claim="even")).input == \
        "4210 even"
    assert render_example(
        TaskId.DECIMAL_OP, ArithmeticInstance(872, 436, "divide")).input == \
        "872 / 436"
    assert render_example(
        TaskId.DECIMAL_WORD_OP,
        ArithmeticInstance(4, 2, "divide", a_notation="word")).input == "four / 2"


def test_render_rejects_out_of_range():
    with pytest.raises(RangeError):
        render_example(TaskId.ODD, ParityQuery(20_001, "odd"))


def test_word_subtraction_renders_with_spaced_hyphen():
    ex = render_example(
        TaskId.DECIMAL_WORD_OP,
        ArithmeticInstance(21, 21, "subtract", "word", "word"))
    assert ex.input == "twenty-one - twenty-one"
    assert label_for_input(TaskId.DECIMAL_WORD_OP, ex.input) == 0


# --- generation ---------------------------------------------------------------


@pytest.mark.parametrize("task", NUMERIC)
def test_generated_labels_agree_with_brute_force_100k(task):
    rng = random.Random(100)
    num_labels = 2 if task in (TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN) else 10
    for i in range(100_000):
        target = i % num_labels
        ex = generate_example(task, target, rng)
        assert ex.label == target
        assert brute_label(task.value, ex.input) == target, ex


@pytest.mark.parametrize("task", NUMERIC)
def test_payload_round_trip(task):
    rng = random.Random(4)
    num_labels = 2 if task in (TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN) else 10
    for i in range(2_000):
        ex = generate_example(task, i % num_labels, rng)
        payload = parse_payload(task, ex.input)
        again = render_example(task, payload)
        assert again == ex


def test_division_is_always_exact():
    rng = random.Random(8)
    for i in range(20_000):
        ex = generate_example(TaskId.DECIMAL_OP, 1 + i % 9, rng)
        payload = parse_payload(TaskId.DECIMAL_OP, ex.input)
        if payload.op == "divide":
            assert payload.a == payload.b * ex.label


def test_subtraction_never_negative():
    rng = random.Random(9)
    for i in range(20_000):
        ex = generate_example(TaskId.DECIMAL_OP, i % 10, rng)
        payload = parse_payload(TaskId.DECIMAL_OP, ex.input)
        if payload.op == "subtract":
            assert 0 <= payload.a - payload.b <= 9


def test_word_notation_appears_for_both_operands():
    rng = random.Random(10)
    notations = Counter()
    for i in range(2_000):
        ex = generate_example(TaskId.DECIMAL_WORD_OP, i % 10, rng)
        payload = parse_payload(TaskId.DECIMAL_WORD_OP, ex.input)
        notations[(payload.a_notation, payload.b_notation)] += 1
    assert set(notations) == {("decimal", "decimal"), ("decimal", "word"),
                              ("word", "decimal"), ("word", "word")}
    for count in notations.values():
        assert count > 2_000 * 0.25 * 0.5  # each mix roughly a quarter


@pytest.mark.parametrize("task", [TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN])
def test_parity_n_uniform_over_range(task):
    # Chi-square goodness of fit over 20 equal bins of [1, 20000].
    rng = random.Random(11)
    bins = [0] * 20
    n_samples = 100_000
    for i in range(n_samples):
        ex = generate_example(task, i % 2, rng)
        n = int(ex.input.split(" ")[0])
        assert 1 <= n <= 20_000
        bins[(n - 1) // 1000] += 1
    _, p = scipy.stats.chisquare(bins)
    assert p > 0.01, f"uniformity rejected: p={p}"


@pytest.mark.parametrize("task", [TaskId.MEAN, TaskId.MEDIAN, TaskId.MODE])
def test_set_statistics_respect_bounds(task):
    rng = random.Random(12)
    lo, hi = (0, 9) if task is TaskId.MODE else (-15, 15)
    lengths = set()
    for i in range(5_000):
        ex = generate_example(task, i % 10, rng)
        values = parse_payload(task, ex.input).values
        lengths.add(len(values))
        assert all(lo <= v <= hi for v in values)
        assert 5 <= len(values) <= 15
        if task is TaskId.MEDIAN:
            assert len(values) % 2 == 1
    if task is TaskId.MEDIAN:
        assert lengths == {5, 7, 9, 11, 13, 15}
    else:
        assert lengths == set(range(5, 16))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 9), st.integers(0, 2**32))
def test_mean_generator_hits_exact_target(target, seed):
    ex = generate_example(TaskId.MEAN, target, random.Random(seed))
    values = parse_payload(TaskId.MEAN, ex.input).values
    assert sum(values) == target * len(values)
