import itertools
import random
from collections import Counter

import pytest
import scipy.stats
from hypothesis import given, settings, strategies as st

from synthbench.automata import (AlphabetError, EmptyLanguageError, alt,
                                 compile_pattern, count_by_length,
                                 feasible_lengths, is_member, lit,
                                 sample_member, sample_member_of_length,
                                 sample_nonmember, seq, star)
from synthbench.model import TaskId
from synthbench.regular import ALPHABETS, MAX_LENGTHS, get_language

from oracles import REGEX_PATTERNS

LANGS = [TaskId.REGEX_012, TaskId.REGEX_ABCDE]


def brute_members(task: TaskId, length: int) -> set[str]:
    pattern = REGEX_PATTERNS[task.value]
    return {"".join(chars)
            for chars in itertools.product(ALPHABETS[task], repeat=length)
            if pattern.fullmatch("".join(chars))}


# --- membership ---------------------------------------------------------------


def test_table_examples_are_members():
    lang = get_language(TaskId.REGEX_012)
    assert lang.dfa.accepts("02")
    assert lang.dfa.accepts("01202102222")
    assert not lang.dfa.accepts("111")  # no '0' present
    lang = get_language(TaskId.REGEX_ABCDE)
    assert lang.dfa.accepts("aaaaaaabbbbcccccddde")
    assert lang.dfa.accepts("abcde")
    assert not lang.dfa.accepts("ba")


def test_foreign_symbol_raises():
    lang = get_language(TaskId.REGEX_012)
    with pytest.raises(AlphabetError):
        lang.dfa.accepts("0x1")


@pytest.mark.parametrize("task", LANGS)
@settings(max_examples=500, deadline=None)
@given(data=st.data())
def test_membership_matches_re_oracle(task, data):
    alphabet = ALPHABETS[task]
    s = data.draw(st.text(alphabet=alphabet, max_size=MAX_LENGTHS[task]))
    lang = get_language(task)
    expected = REGEX_PATTERNS[task.value].fullmatch(s) is not None
    assert lang.dfa.accepts(s) == expected


# --- compilation --------------------------------------------------------------


def test_minimal_dfa_is_canonical_per_language():
    # Two different ASTs for the same language compile to the same automaton.
    a = seq(star(alt(lit("0"), lit("1"), lit("2"))), lit("0"), star(lit("2")))
    b = seq(star(alt(lit("2"), lit("1"), lit("0"))), lit("0"), star(lit("2")))
    assert compile_pattern(a, "012") == compile_pattern(b, "012")


def test_complement_flips_membership():
    lang = get_language(TaskId.REGEX_012)
    comp = lang.dfa.complement()
    for s in ("", "0", "1", "02", "021", "2220"):
        assert comp.accepts(s) != lang.dfa.accepts(s)


# --- counting -----------------------------------------------------------------


@pytest.mark.parametrize("task", LANGS)
def test_counts_match_exhaustive_enumeration_to_8(task):
    lang = get_language(task)
    start = lang.dfa.start
    for length in range(1, 9):
        expected = len(brute_members(task, length))
        assert lang.counts.counts[length][start] == expected
        comp_expected = len(ALPHABETS[task]) ** length - expected
        assert lang.complement_counts.counts[length][start] == comp_expected


def test_count_length_zero_tracks_start_acceptance():
    lang = get_language(TaskId.REGEX_012)
    accepts_empty = lang.dfa.start in lang.dfa.accepting
    assert lang.counts.counts[0][lang.dfa.start] == int(accepts_empty)
    empty = compile_pattern(star(lit("0")), "0")
    table = count_by_length(empty, 3)
    assert table.counts[0][empty.start] == 1


def test_counts_follow_transition_recurrence():
    lang = get_language(TaskId.REGEX_ABCDE)
    dfa, counts = lang.dfa, lang.counts.counts
    for length in range(1, lang.max_len + 1):
        for q in range(dfa.n_states):
            assert counts[length][q] == sum(counts[length - 1][t]
                                            for t in dfa.transitions[q])


# --- sampling -----------------------------------------------------------------


@pytest.mark.parametrize("task", LANGS)
def test_sampled_members_always_accepted(task):
    lang = get_language(task)
    rng = random.Random(21)
    for _ in range(20_000):
        assert lang.dfa.accepts(sample_member(lang.dfa, lang.counts, rng))


@pytest.mark.parametrize("task", LANGS)
def test_sampled_nonmembers_always_rejected(task):
    lang = get_language(task)
    rng = random.Random(22)
    for _ in range(20_000):
        s = sample_nonmember(lang.dfa, lang.complement_counts, rng)
        assert not lang.dfa.accepts(s)
        assert 1 <= len(s) <= lang.max_len


def test_member_lengths_cover_all_feasible():
    lang = get_language(TaskId.REGEX_012)
    rng = random.Random(23)
    seen = {len(sample_member(lang.dfa, lang.counts, rng)) for _ in range(100_000)}
    assert seen == set(range(1, 21))


def test_nonmember_lengths_span_full_range_for_abcde():
    lang = get_language(TaskId.REGEX_ABCDE)
    rng = random.Random(24)
    seen = {len(sample_nonmember(lang.dfa, lang.complement_counts, rng))
            for _ in range(100_000)}
    assert seen == set(range(1, 31))


def test_conditional_uniformity_at_length_4():
    # Exhaustive member set at length 4, chi-square over 100k draws.
    lang = get_language(TaskId.REGEX_012)
    members = sorted(brute_members(TaskId.REGEX_012, 4))
    rng = random.Random(25)
    freq = Counter(sample_member_of_length(lang.dfa, lang.counts, 4, rng)
                   for _ in range(100_000))
    assert set(freq) <= set(members)
    _, p = scipy.stats.chisquare([freq.get(m, 0) for m in members])
    assert p > 0.01, f"uniformity rejected: p={p}"


def test_every_member_up_to_length_6_appears_in_1m_samples():
    lang = get_language(TaskId.REGEX_012)
    short_table = count_by_length(lang.dfa, 6)
    expected = set()
    for length in range(1, 7):
        expected |= brute_members(TaskId.REGEX_012, length)
    rng = random.Random(26)
    seen = {sample_member(lang.dfa, short_table, rng) for _ in range(1_000_000)}
    assert seen == expected


def test_positive_negative_length_histograms_match_where_shared():
    # Total-variation distance over lengths feasible for both sides.
    for task in LANGS:
        lang = get_language(task)
        rng = random.Random(27)
        n = 100_000
        pos = Counter(len(sample_member(lang.dfa, lang.counts, rng))
                      for _ in range(n))
        neg = Counter(len(sample_nonmember(lang.dfa, lang.complement_counts, rng))
                      for _ in range(n))
        shared = sorted(
            set(feasible_lengths(lang.dfa, lang.counts)) &
            set(feasible_lengths(lang.complement, lang.complement_counts)))
        pos_total = sum(pos[l] for l in shared)
        neg_total = sum(neg[l] for l in shared)
        tvd = 0.5 * sum(abs(pos[l] / pos_total - neg[l] / neg_total)
                        for l in shared)
        assert tvd <= 0.05, f"{task}: TVD {tvd}"


def test_empty_language_raises():
    nothing = compile_pattern(seq(lit("0"), lit("0")), "0")
    table = count_by_length(nothing, 1)  # only length-2 members exist
    with pytest.raises(EmptyLanguageError):
        sample_member(nothing, table, random.Random(0))


def test_is_member_helper():
    lang = get_language(TaskId.REGEX_ABCDE)
    assert is_member(lang.dfa, "abcde")
    assert not is_member(lang.dfa, "edcba")
