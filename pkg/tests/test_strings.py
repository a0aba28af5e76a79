import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from synthbench import generate_example, label_for_input, parse_payload, render_example
from synthbench.model import RangeError, TaskId
from synthbench.strings import (ConstraintError, StringInstance, oracle_string,
                                parse_string_payload)

from oracles import brute_label

STRINGY = [TaskId.PALINDROME, TaskId.ANAGRAM, TaskId.ISOGRAM, TaskId.TAUTONYM,
           TaskId.STR_LENGTH, TaskId.UNIQUE_COUNT, TaskId.PARITY, TaskId.VOWELS,
           TaskId.MAX_FREQ_CHAR]
BINARY = {TaskId.PALINDROME, TaskId.ANAGRAM, TaskId.ISOGRAM, TaskId.TAUTONYM,
          TaskId.PARITY, TaskId.VOWELS}


def labels_for(task):
    return 2 if task in BINARY else 10


# --- oracle fixtures ----------------------------------------------------------


def test_oracle_table_rows():
    assert oracle_string(TaskId.PALINDROME, StringInstance("aWXXWa")) == 1
    assert oracle_string(TaskId.ANAGRAM, StringInstance("rGrPJhk", "khGrPJr")) == 1
    assert oracle_string(TaskId.ISOGRAM, StringInstance("vFJoSj")) == 1
    assert oracle_string(TaskId.STR_LENGTH, StringInstance("teeo")) == 4
    assert oracle_string(TaskId.UNIQUE_COUNT, StringInstance("deiieediid")) == 3
    assert oracle_string(TaskId.PARITY, StringInstance("011101001110")) == 0
    assert oracle_string(TaskId.VOWELS, StringInstance("iivxcmoouo")) == 0
    assert oracle_string(TaskId.MAX_FREQ_CHAR, StringInstance("jjjcjj")) == 9


def test_tautonym_requires_identical_halves():
    # The printed example pair has unequal halves, so the definitional rule
    # labels it 0; equal halves label 1.
    discrepant = parse_string_payload(TaskId.TAUTONYM, "s t P v g - t P v g a")
    assert oracle_string(TaskId.TAUTONYM, discrepant) == 0
    assert oracle_string(TaskId.TAUTONYM, StringInstance("ab", "ab")) == 1


def test_case_sensitivity_is_load_bearing():
    # 'J' and 'j' coexist in the isogram row; comparisons never fold case.
    assert oracle_string(TaskId.ISOGRAM, StringInstance("Jj")) == 1
    assert oracle_string(TaskId.PALINDROME, StringInstance("aA")) == 0
    assert oracle_string(TaskId.ANAGRAM, StringInstance("ab", "aB")) == 0


def test_oracle_rejects_out_of_range_and_ties():
    with pytest.raises(RangeError):
        oracle_string(TaskId.PALINDROME, StringInstance("a" * 16))
    with pytest.raises(RangeError):
        oracle_string(TaskId.VOWELS, StringInstance("ae"))
    with pytest.raises(RangeError):
        oracle_string(TaskId.PARITY, StringInstance("012"))
    with pytest.raises(ConstraintError):
        oracle_string(TaskId.MAX_FREQ_CHAR, StringInstance("aabb" + "c"))


# --- rendering ----------------------------------------------------------------


def test_render_single_and_pair_forms():
    assert render_example(TaskId.PALINDROME, StringInstance("aWXXWa")).input == \
        "a W X X W a"
    assert render_example(TaskId.TAUTONYM, StringInstance("ab", "ab")).input == \
        "a b - a b"
    ex = render_example(TaskId.ANAGRAM, StringInstance("rGrPJhk", "khGrPJr"))
    assert ex.input == "r G r P J h k - k h G r P J r"
    assert ex.label == 1


# --- generation ---------------------------------------------------------------


@pytest.mark.parametrize("task", STRINGY)
def test_generated_labels_agree_with_brute_force_100k(task):
    rng = random.Random(200)
    n_labels = labels_for(task)
    for i in range(100_000):
        target = i % n_labels
        ex = generate_example(task, target, rng)
        assert ex.label == target
        assert brute_label(task.value, ex.input) == target, ex


@pytest.mark.parametrize("task", STRINGY)
def test_payload_round_trip(task):
    rng = random.Random(201)
    for i in range(2_000):
        ex = generate_example(task, i % labels_for(task), rng)
        assert render_example(task, parse_payload(task, ex.input)) == ex


def test_palindrome_label_invariant_under_reversal():
    rng = random.Random(202)
    for _ in range(2_000):
        ex = generate_example(TaskId.PALINDROME, 1, rng)
        inst = parse_payload(TaskId.PALINDROME, ex.input)
        assert oracle_string(TaskId.PALINDROME, StringInstance(inst.s[::-1])) == 1


def test_anagram_label_invariant_under_swap_and_shuffle():
    rng = random.Random(203)
    for _ in range(2_000):
        ex = generate_example(TaskId.ANAGRAM, 1, rng)
        inst = parse_payload(TaskId.ANAGRAM, ex.input)
        assert oracle_string(TaskId.ANAGRAM, StringInstance(inst.t, inst.s)) == 1
        reshuffled = "".join(rng.sample(inst.t, len(inst.t)))
        assert oracle_string(TaskId.ANAGRAM, StringInstance(inst.s, reshuffled)) == 1


def test_anagram_swap_preserves_negative_label_too():
    rng = random.Random(204)
    for _ in range(1_000):
        ex = generate_example(TaskId.ANAGRAM, 0, rng)
        inst = parse_payload(TaskId.ANAGRAM, ex.input)
        assert oracle_string(TaskId.ANAGRAM, StringInstance(inst.t, inst.s)) == 0


# --- near-miss negatives --------------------------------------------------------


def _one_mismatched_pair(s: str) -> bool:
    return sum(s[i] != s[-1 - i] for i in range(len(s) // 2)) == 1


def _multiset_delta_is_one_edit(s: str, t: str) -> bool:
    delta = Counter(s)
    delta.subtract(Counter(t))
    return sum(abs(v) for v in delta.values()) == 2


def test_palindrome_negatives_include_single_edit_corruptions():
    rng = random.Random(205)
    near = total = 0
    for _ in range(5_000):
        ex = generate_example(TaskId.PALINDROME, 0, rng)
        s = parse_payload(TaskId.PALINDROME, ex.input).s
        near += _one_mismatched_pair(s)
        total += 1
    assert near / total >= 0.20


def test_anagram_negatives_include_single_edit_corruptions():
    rng = random.Random(206)
    near = 0
    for _ in range(5_000):
        ex = generate_example(TaskId.ANAGRAM, 0, rng)
        inst = parse_payload(TaskId.ANAGRAM, ex.input)
        near += (len(inst.s) == len(inst.t)
                 and _multiset_delta_is_one_edit(inst.s, inst.t))
    assert near / 5_000 >= 0.20


def test_tautonym_negatives_include_single_edit_corruptions():
    rng = random.Random(207)
    near = 0
    for _ in range(5_000):
        ex = generate_example(TaskId.TAUTONYM, 0, rng)
        inst = parse_payload(TaskId.TAUTONYM, ex.input)
        near += (len(inst.s) == len(inst.t)
                 and sum(a != b for a, b in zip(inst.s, inst.t)) == 1)
    assert near / 5_000 >= 0.20


# --- distribution/shape checks ---------------------------------------------------


def test_parity_positives_are_balanced_even_lengths():
    rng = random.Random(208)
    lengths = set()
    for _ in range(10_000):
        ex = generate_example(TaskId.PARITY, 1, rng)
        s = parse_payload(TaskId.PARITY, ex.input).s
        assert len(s) % 2 == 0 and len(s) <= 20
        assert s.count("1") == s.count("0")
        lengths.add(len(s))
    assert lengths == set(range(2, 21, 2))


def test_parity_negatives_span_all_lengths():
    rng = random.Random(209)
    lengths = {len(parse_payload(TaskId.PARITY,
                                 generate_example(TaskId.PARITY, 0, rng).input).s)
               for _ in range(10_000)}
    assert lengths == set(range(1, 21))


def test_palindrome_negative_never_palindromic_in_100k():
    rng = random.Random(210)
    for _ in range(100_000):
        ex = generate_example(TaskId.PALINDROME, 0, rng)
        s = parse_payload(TaskId.PALINDROME, ex.input).s
        assert s != s[::-1]


def test_unique_count_exact_distinct_counts():
    rng = random.Random(211)
    for i in range(5_000):
        target = i % 10
        ex = generate_example(TaskId.UNIQUE_COUNT, target, rng)
        s = parse_payload(TaskId.UNIQUE_COUNT, ex.input).s
        assert len(set(s)) % 10 == target
        assert 10 <= len(s) <= 30


def test_surjective_sampler_is_uniform_on_small_case():
    # d=2 symbols, length 3: 6 surjective strings, each 1/6.
    from synthbench.strings import _sample_surjective
    rng = random.Random(212)
    freq = Counter(_sample_surjective("ab", 3, rng) for _ in range(60_000))
    assert set(freq) == {"aab", "aba", "abb", "baa", "bab", "bba"}
    for count in freq.values():
        assert abs(count - 10_000) < 500


def test_vowel_task_alphabets():
    rng = random.Random(213)
    for _ in range(2_000):
        pos = parse_payload(TaskId.VOWELS, generate_example(TaskId.VOWELS, 1, rng).input).s
        assert set(pos) <= set("aeiou")
        neg = parse_payload(TaskId.VOWELS, generate_example(TaskId.VOWELS, 0, rng).input).s
        assert not set(neg) <= set("aeiou")
        assert 3 <= len(pos) <= 10 and 3 <= len(neg) <= 10


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(STRINGY), st.integers(0, 2**32))
def test_label_for_input_equals_stored_label(task, seed):
    rng = random.Random(seed)
    ex = generate_example(task, rng.randrange(labels_for(task)), rng)
    assert label_for_input(task, ex.input) == ex.label
