"""String-reasoning tasks: palindromes, anagram/tautonym pairs, isograms,
lengths, distinct counts, binary-string balance, vowel-only strings, and
most-frequent characters.

All comparisons are case-sensitive. Positives are built constructively
where cheap (mirror a half, permute, duplicate, sample without
replacement); negatives are rejection-sampled, with a seeded share of
single-edit corruptions of positives for the pair/palindrome tasks so that
labels cannot be read off gross length statistics.
"""

from __future__ import annotations

import random
import string
from collections import Counter
from dataclasses import dataclass

from .model import Example, RangeError, TaskId
from .numeric import ConstraintError, GenerationError, MAX_ATTEMPTS

LETTERS = string.ascii_lowercase + string.ascii_uppercase  # 52 symbols
LOWER = string.ascii_lowercase
DECILE_CHARS = "abcdefghij"
VOWELS = "aeiou"

# Fraction of palindrome/anagram/tautonym negatives produced by corrupting
# a fresh positive in exactly one character position.
NEAR_MISS_RATE = 0.25

CHAR_LABELS = {c: i for i, c in enumerate(DECILE_CHARS)}
LABEL_CHARS = {i: c for c, i in CHAR_LABELS.items()}

PAIR_TASKS = frozenset({TaskId.ANAGRAM, TaskId.TAUTONYM})

_LENGTHS = {
    TaskId.PALINDROME: (1, 15),
    TaskId.ANAGRAM: (2, 15),
    TaskId.ISOGRAM: (1, 52),
    TaskId.STR_LENGTH: (1, 10),
    TaskId.UNIQUE_COUNT: (10, 30),
    TaskId.PARITY: (1, 20),
    TaskId.VOWELS: (3, 10),
    TaskId.MAX_FREQ_CHAR: (5, 30),
}
TAUTONYM_HALF_MAX = 5  # total rendered length <= 10

_ALPHABETS = {
    TaskId.PALINDROME: LETTERS,
    TaskId.ANAGRAM: LETTERS,
    TaskId.ISOGRAM: LETTERS,
    TaskId.TAUTONYM: LETTERS,
    TaskId.STR_LENGTH: LOWER,
    TaskId.UNIQUE_COUNT: DECILE_CHARS,
    TaskId.PARITY: "01",
    TaskId.VOWELS: LOWER,
    TaskId.MAX_FREQ_CHAR: DECILE_CHARS,
}


@dataclass(frozen=True)
class StringInstance:
    s: str
    t: str | None = None  # second member, pair tasks only


def _check_instance(task: TaskId, inst: StringInstance) -> None:
    alphabet = _ALPHABETS[task]
    members = (inst.s,) if inst.t is None else (inst.s, inst.t)
    for m in members:
        for ch in m:
            if ch not in alphabet:
                raise RangeError(f"{task}: character {ch!r} outside task alphabet")
    if (inst.t is not None) != (task in PAIR_TASKS):
        raise ConstraintError(f"{task}: second member must be present iff pair task")
    if task is TaskId.TAUTONYM:
        total = len(inst.s) + len(inst.t)
        if not 2 <= total <= 2 * TAUTONYM_HALF_MAX:
            raise RangeError(f"tautonym total length {total} outside [2, 10]")
    else:
        lo, hi = _LENGTHS[task]
        for m in members:
            if not lo <= len(m) <= hi:
                raise RangeError(f"{task}: length {len(m)} outside [{lo}, {hi}]")


def oracle_string(task: TaskId, inst: StringInstance) -> int:
    """Exact label for a string payload (case-sensitive throughout)."""
    _check_instance(task, inst)
    s, t = inst.s, inst.t
    if task is TaskId.PALINDROME:
        return int(s == s[::-1])
    if task is TaskId.ANAGRAM:
        return int(sorted(s) == sorted(t))
    if task is TaskId.ISOGRAM:
        return int(len(set(s)) == len(s))
    if task is TaskId.TAUTONYM:
        return int(s == t)
    if task is TaskId.STR_LENGTH:
        return len(s) % 10
    if task is TaskId.UNIQUE_COUNT:
        return len(set(s)) % 10
    if task is TaskId.PARITY:
        ones = s.count("1")
        return int(ones == len(s) - ones)
    if task is TaskId.VOWELS:
        return int(all(c in VOWELS for c in s))
    if task is TaskId.MAX_FREQ_CHAR:
        counts = Counter(s).most_common(2)
        if len(counts) > 1 and counts[0][1] == counts[1][1]:
            raise ConstraintError("most frequent character is tied")
        return CHAR_LABELS[counts[0][0]]
    raise ValueError(f"{task} is not a string task")


def render_string(task: TaskId, inst: StringInstance) -> str:
    _check_instance(task, inst)
    if inst.t is not None:
        return " ".join(inst.s) + " - " + " ".join(inst.t)
    return " ".join(inst.s)


def parse_string_payload(task: TaskId, text: str) -> StringInstance:
    if task in PAIR_TASKS:
        left, sep, right = text.partition(" - ")
        if not sep:
            raise ValueError(f"{task}: missing ' - ' pair separator in {text!r}")
        return StringInstance(s="".join(left.split(" ")), t="".join(right.split(" ")))
    return StringInstance(s="".join(text.split(" ")))


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------


def _rand_string(rng: random.Random, alphabet: str, length: int) -> str:
    return "".join(rng.choices(alphabet, k=length))


def _corrupt_one(s: str, rng: random.Random, alphabet: str,
                 positions: list[int] | None = None) -> str:
    i = rng.choice(positions) if positions is not None else rng.randrange(len(s))
    replacement = rng.choice(alphabet.replace(s[i], ""))
    return s[:i] + replacement + s[i + 1:]


def _gen_palindrome(target: int, rng: random.Random) -> StringInstance:
    if target == 1:
        length = rng.randint(1, 15)
        half = _rand_string(rng, LETTERS, (length + 1) // 2)
        mirrored = half[: length // 2][::-1]
        return StringInstance(half + mirrored)
    if rng.random() < NEAR_MISS_RATE:
        base = _gen_palindrome(1, rng).s
        while len(base) < 2:
            base = _gen_palindrome(1, rng).s
        # Corrupting the middle of an odd-length palindrome keeps it one.
        positions = [i for i in range(len(base)) if i != len(base) - 1 - i]
        return StringInstance(_corrupt_one(base, rng, LETTERS, positions))
    for _ in range(MAX_ATTEMPTS):
        s = _rand_string(rng, LETTERS, rng.randint(2, 15))
        if s != s[::-1]:
            return StringInstance(s)
    raise GenerationError("palindrome: could not draw a non-palindrome")


def _gen_anagram(target: int, rng: random.Random) -> StringInstance:
    length = rng.randint(2, 15)
    s = _rand_string(rng, LETTERS, length)
    shuffled = "".join(rng.sample(s, length))
    if target == 1:
        return StringInstance(s, shuffled)
    if rng.random() < NEAR_MISS_RATE:
        return StringInstance(s, _corrupt_one(shuffled, rng, LETTERS))
    for _ in range(MAX_ATTEMPTS):
        t = _rand_string(rng, LETTERS, length)
        if sorted(t) != sorted(s):
            return StringInstance(s, t)
    raise GenerationError("anagram: could not draw a non-anagram pair")


def _gen_isogram(target: int, rng: random.Random) -> StringInstance:
    if target == 1:
        length = rng.randint(1, 52)
        return StringInstance("".join(rng.sample(LETTERS, length)))
    for _ in range(MAX_ATTEMPTS):
        s = _rand_string(rng, LETTERS, rng.randint(2, 52))
        if len(set(s)) != len(s):
            return StringInstance(s)
    raise GenerationError("isogram: could not draw a repeated character")


def _gen_tautonym(target: int, rng: random.Random) -> StringInstance:
    if target == 1:
        half = _rand_string(rng, LETTERS, rng.randint(1, TAUTONYM_HALF_MAX))
        return StringInstance(half, half)
    if rng.random() < NEAR_MISS_RATE:
        half = _rand_string(rng, LETTERS, rng.randint(1, TAUTONYM_HALF_MAX))
        return StringInstance(half, _corrupt_one(half, rng, LETTERS))
    for _ in range(MAX_ATTEMPTS):
        s = _rand_string(rng, LETTERS, rng.randint(1, TAUTONYM_HALF_MAX))
        t = _rand_string(rng, LETTERS, rng.randint(1, TAUTONYM_HALF_MAX))
        if s != t:
            return StringInstance(s, t)
    raise GenerationError("tautonym: could not draw distinct halves")


def _gen_str_length(target: int, rng: random.Random) -> StringInstance:
    length = target if target else 10
    return StringInstance(_rand_string(rng, LOWER, length))


# Completion counts for uniform sampling of strings over d symbols that use
# every symbol at least once: ways[m][j] = fillings of m slots given j
# symbols already used, ending with all d used.
_surjection_tables: dict[int, list[list[int]]] = {}


def _surjection_ways(d: int, max_len: int) -> list[list[int]]:
    table = _surjection_tables.get(d)
    if table is None or len(table) <= max_len:
        table = [[0] * (d + 1) for _ in range(max_len + 1)]
        table[0][d] = 1
        for m in range(1, max_len + 1):
            for j in range(d + 1):
                total = j * table[m - 1][j]
                if j < d:
                    total += (d - j) * table[m - 1][j + 1]
                table[m][j] = total
        _surjection_tables[d] = table
    return table


def _sample_surjective(symbols: str, length: int, rng: random.Random) -> str:
    """Uniform draw over length-`length` strings using every symbol once+."""
    d = len(symbols)
    ways = _surjection_ways(d, length)
    if ways[length][0] == 0:
        raise GenerationError(f"no length-{length} string covers {d} symbols")
    used: list[str] = []
    unused = list(symbols)
    out = []
    for m in range(length, 0, -1):
        j = len(used)
        w_old = j * ways[m - 1][j]
        w_new = (d - j) * ways[m - 1][j + 1] if j < d else 0
        if rng.randrange(w_old + w_new) < w_old:
            out.append(rng.choice(used))
        else:
            pick = unused.pop(rng.randrange(len(unused)))
            used.append(pick)
            out.append(pick)
    return "".join(out)


def _gen_unique_count(target: int, rng: random.Random) -> StringInstance:
    distinct = target if target else 10
    length = rng.randint(10, 30)
    symbols = "".join(rng.sample(DECILE_CHARS, distinct))
    return StringInstance(_sample_surjective(symbols, length, rng))


def _gen_parity_string(target: int, rng: random.Random) -> StringInstance:
    if target == 1:
        ones = rng.randint(1, 10)
        bits = list("0" * ones + "1" * ones)
        rng.shuffle(bits)
        return StringInstance("".join(bits))
    # Negatives span all lengths <= 20; odd lengths are negative by parity.
    for _ in range(MAX_ATTEMPTS):
        s = _rand_string(rng, "01", rng.randint(1, 20))
        if s.count("1") * 2 != len(s):
            return StringInstance(s)
    raise GenerationError("parity: could not draw an unbalanced string")


def _gen_vowels(target: int, rng: random.Random) -> StringInstance:
    length = rng.randint(3, 10)
    if target == 1:
        return StringInstance(_rand_string(rng, VOWELS, length))
    for _ in range(MAX_ATTEMPTS):
        s = _rand_string(rng, LOWER, length)
        if any(c not in VOWELS for c in s):
            return StringInstance(s)
    raise GenerationError("vowels: could not draw a consonant")


def _gen_max_freq(target: int, rng: random.Random) -> StringInstance:
    want = LABEL_CHARS[target]
    for _ in range(MAX_ATTEMPTS):
        s = _rand_string(rng, DECILE_CHARS, rng.randint(5, 30))
        counts = Counter(s).most_common(2)
        if counts[0][0] == want and (len(counts) == 1 or counts[0][1] > counts[1][1]):
            return StringInstance(s)
    raise GenerationError(f"max_freq_char: no unique argmax {want!r}")


_GENERATORS = {
    TaskId.PALINDROME: _gen_palindrome,
    TaskId.ANAGRAM: _gen_anagram,
    TaskId.ISOGRAM: _gen_isogram,
    TaskId.TAUTONYM: _gen_tautonym,
    TaskId.STR_LENGTH: _gen_str_length,
    TaskId.UNIQUE_COUNT: _gen_unique_count,
    TaskId.PARITY: _gen_parity_string,
    TaskId.VOWELS: _gen_vowels,
    TaskId.MAX_FREQ_CHAR: _gen_max_freq,
}


def gen_string_payload(task: TaskId, target: int, rng: random.Random) -> StringInstance:
    return _GENERATORS[task](target, rng)


def gen_string_example(task: TaskId, target: int, rng: random.Random) -> Example:
    inst = gen_string_payload(task, target, rng)
    label = oracle_string(task, inst)
    assert label == target, f"constructed label {label} != target {target}"
    return Example(render_string(task, inst), label)
