"""Cardinal number spelling for word-notation arithmetic operands."""

from .model import RangeError

_ONES = (
    "", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen",
)
_TENS = ("", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
         "eighty", "ninety")

MAX_SPELLED = 10_000

_words_to_num: dict[str, int] = {}


def number_to_words(n: int) -> str:
    """Lowercase US-English cardinal, hyphenated tens, no 'and' (1..10000)."""
    if not 1 <= n <= MAX_SPELLED:
        raise RangeError(f"{n} outside spellable range 1..{MAX_SPELLED}")
    if n == 10_000:
        return "ten thousand"
    parts = []
    if n >= 1000:
        parts.append(_ONES[n // 1000] + " thousand")
        n %= 1000
    if n >= 100:
        parts.append(_ONES[n // 100] + " hundred")
        n %= 100
    if n >= 20:
        tens = _TENS[n // 10]
        parts.append(tens + "-" + _ONES[n % 10] if n % 10 else tens)
    elif n:
        parts.append(_ONES[n])
    return " ".join(parts)


def words_to_number(words: str) -> int:
    """Inverse of :func:`number_to_words` for its exact output forms."""
    if not _words_to_num:
        for i in range(1, MAX_SPELLED + 1):
            _words_to_num[number_to_words(i)] = i
    try:
        return _words_to_num[words]
    except KeyError:
        raise RangeError(f"unrecognized number spelling: {words!r}") from None
