"""The two built-in regular-language recognition tasks.

Patterns are fixed ASTs (no surface regex parser): one language over
{0,1,2} requiring a 0 followed only by 2s, and one over {a..e} requiring
one or more of each letter in order. Positive and negative examples are
sampled exactly uniformly per length from the language and its complement;
the surface form is lowercase, space-separated symbols.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .automata import (CountTable, Dfa, alt, compile_pattern, count_by_length,
                       lit, plus, sample_member, seq, star)
from .model import Example, TaskId

MAX_LENGTHS = {TaskId.REGEX_012: 20, TaskId.REGEX_ABCDE: 30}
ALPHABETS = {TaskId.REGEX_012: "012", TaskId.REGEX_ABCDE: "abcde"}


def _pattern_012():
    # {0,1,2}* 0 2*
    any_sym = alt(lit("0"), lit("1"), lit("2"))
    return seq(star(any_sym), lit("0"), star(lit("2")))


def _pattern_abcde():
    # A A* B B* C C* D D* E E*, rendered in lowercase
    return seq(*(plus(lit(c)) for c in "abcde"))


_PATTERNS = {TaskId.REGEX_012: _pattern_012, TaskId.REGEX_ABCDE: _pattern_abcde}


@dataclass(frozen=True)
class RegexLanguage:
    task: TaskId
    dfa: Dfa
    counts: CountTable
    complement: Dfa
    complement_counts: CountTable
    max_len: int


@lru_cache(maxsize=None)
def get_language(task: TaskId) -> RegexLanguage:
    max_len = MAX_LENGTHS[task]
    dfa = compile_pattern(_PATTERNS[task](), ALPHABETS[task])
    complement = dfa.complement()
    return RegexLanguage(
        task=task,
        dfa=dfa,
        counts=count_by_length(dfa, max_len),
        complement=complement,
        complement_counts=count_by_length(complement, max_len),
        max_len=max_len,
    )


def parse_regex_payload(task: TaskId, text: str) -> str:
    symbols = "".join(text.split(" "))
    lang = get_language(task)
    for ch in symbols:
        lang.dfa.symbol_index(ch)  # raises AlphabetError on foreign symbols
    return symbols


def oracle_regex(task: TaskId, symbols: str) -> int:
    return int(get_language(task).dfa.accepts(symbols))


def render_regex(task: TaskId, symbols: str) -> str:
    return " ".join(symbols)


def gen_regex_example(task: TaskId, target: int, rng: random.Random) -> Example:
    lang = get_language(task)
    if target == 1:
        symbols = sample_member(lang.dfa, lang.counts, rng)
    else:
        symbols = sample_member(lang.complement, lang.complement_counts, rng)
    return Example(render_regex(task, symbols), target)
