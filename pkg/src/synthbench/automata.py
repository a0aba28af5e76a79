"""Regular-language kernel.

Tiny regex ASTs (symbols, concatenation, union, Kleene star) are compiled
via Thompson construction and subset construction into total DFAs, then
minimized and canonically renumbered so equal languages yield equal
automata. A length-indexed table of exact accepted-suffix counts per state
(arbitrary-precision integers) drives exactly-uniform member sampling:
lengths are drawn uniformly over the feasible lengths and strings uniformly
within a length by walking transitions weighted by suffix counts.
Non-members are sampled the same way from the complement automaton.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union


class AlphabetError(ValueError):
    """A string contains a symbol outside the automaton's alphabet."""


class EmptyLanguageError(RuntimeError):
    """No string of any feasible length exists to sample."""


# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Sym:
    char: str


@dataclass(frozen=True)
class Concat:
    parts: tuple["Node", ...]


@dataclass(frozen=True)
class Union_:
    parts: tuple["Node", ...]


@dataclass(frozen=True)
class Star:
    inner: "Node"


Node = Union[Sym, Concat, Union_, Star]


def lit(char: str) -> Sym:
    return Sym(char)


def seq(*parts: Node) -> Concat:
    return Concat(tuple(parts))


def alt(*parts: Node) -> Union_:
    return Union_(tuple(parts))


def star(inner: Node) -> Star:
    return Star(inner)


def plus(inner: Node) -> Concat:
    return seq(inner, star(inner))


# --- DFA ------------------------------------------------------------------


@dataclass(frozen=True)
class Dfa:
    """Total deterministic automaton over an ordered alphabet."""

    alphabet: tuple[str, ...]
    transitions: tuple[tuple[int, ...], ...]  # [state][symbol_index] -> state
    start: int
    accepting: frozenset[int]

    @property
    def n_states(self) -> int:
        return len(self.transitions)

    def symbol_index(self, char: str) -> int:
        try:
            return self.alphabet.index(char)
        except ValueError:
            raise AlphabetError(f"symbol {char!r} not in alphabet {self.alphabet}") from None

    def accepts(self, symbols: str) -> bool:
        state = self.start
        for ch in symbols:
            state = self.transitions[state][self.symbol_index(ch)]
        return state in self.accepting

    def complement(self) -> "Dfa":
        return Dfa(alphabet=self.alphabet, transitions=self.transitions,
                   start=self.start,
                   accepting=frozenset(range(self.n_states)) - self.accepting)


def is_member(dfa: Dfa, symbols: str) -> bool:
    return dfa.accepts(symbols)


# --- Compilation ----------------------------------------------------------


def _thompson(node: Node, nfa_eps: list[list[int]],
              nfa_sym: list[dict[str, list[int]]]) -> tuple[int, int]:
    """Returns (entry, exit) state ids; mutates the transition lists."""

    def new_state() -> int:
        nfa_eps.append([])
        nfa_sym.append({})
        return len(nfa_eps) - 1

    if isinstance(node, Sym):
        a, b = new_state(), new_state()
        nfa_sym[a].setdefault(node.char, []).append(b)
        return a, b
    if isinstance(node, Concat):
        a = b = new_state()
        for part in node.parts:
            pa, pb = _thompson(part, nfa_eps, nfa_sym)
            nfa_eps[b].append(pa)
            b = pb
        return a, b
    if isinstance(node, Union_):
        a, b = new_state(), new_state()
        for part in node.parts:
            pa, pb = _thompson(part, nfa_eps, nfa_sym)
            nfa_eps[a].append(pa)
            nfa_eps[pb].append(b)
        return a, b
    if isinstance(node, Star):
        a, b = new_state(), new_state()
        pa, pb = _thompson(node.inner, nfa_eps, nfa_sym)
        nfa_eps[a] += [pa, b]
        nfa_eps[pb] += [pa, b]
        return a, b
    raise TypeError(f"unknown AST node: {node!r}")


def _eps_closure(states: frozenset[int], nfa_eps: list[list[int]]) -> frozenset[int]:
    stack = list(states)
    seen = set(states)
    while stack:
        for nxt in nfa_eps[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def compile_pattern(node: Node, alphabet: str) -> Dfa:
    """Compile an AST to the canonical minimal total DFA for its language."""
    symbols = tuple(alphabet)
    nfa_eps: list[list[int]] = []
    nfa_sym: list[dict[str, list[int]]] = []
    entry, exit_ = _thompson(node, nfa_eps, nfa_sym)

    start = _eps_closure(frozenset({entry}), nfa_eps)
    subset_ids: dict[frozenset[int], int] = {start: 0}
    rows: dict[int, list[int]] = {}
    worklist = [start]
    while worklist:
        current = worklist.pop()
        row = [0] * len(symbols)
        for si, ch in enumerate(symbols):
            targets: set[int] = set()
            for q in current:
                targets.update(nfa_sym[q].get(ch, ()))
            nxt = _eps_closure(frozenset(targets), nfa_eps)
            if nxt not in subset_ids:
                subset_ids[nxt] = len(subset_ids)
                worklist.append(nxt)
            row[si] = subset_ids[nxt]
        rows[subset_ids[current]] = row
    accepting = frozenset(i for s, i in subset_ids.items() if exit_ in s)
    dfa = Dfa(alphabet=symbols,
              transitions=tuple(tuple(rows[i]) for i in range(len(rows))),
              start=0, accepting=accepting)
    return _canonicalize(_minimize(dfa))


def _minimize(dfa: Dfa) -> Dfa:
    """Moore partition refinement (the automata here are tiny)."""
    n = dfa.n_states
    block = [1 if q in dfa.accepting else 0 for q in range(n)]
    while True:
        signatures = {}
        new_block = [0] * n
        for q in range(n):
            sig = (block[q],) + tuple(block[t] for t in dfa.transitions[q])
            new_block[q] = signatures.setdefault(sig, len(signatures))
        if new_block == block:
            break
        block = new_block
    n_blocks = max(block) + 1
    transitions = [[0] * len(dfa.alphabet) for _ in range(n_blocks)]
    for q in range(n):
        for si in range(len(dfa.alphabet)):
            transitions[block[q]][si] = block[dfa.transitions[q][si]]
    accepting = frozenset(block[q] for q in dfa.accepting)
    return Dfa(alphabet=dfa.alphabet,
               transitions=tuple(tuple(r) for r in transitions),
               start=block[dfa.start], accepting=accepting)


def _canonicalize(dfa: Dfa) -> Dfa:
    """Renumber states in BFS order from the start, symbols in order."""
    order = {dfa.start: 0}
    queue = [dfa.start]
    while queue:
        q = queue.pop(0)
        for t in dfa.transitions[q]:
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    # Unreachable states are dropped (none exist after subset construction).
    transitions = [[0] * len(dfa.alphabet) for _ in range(len(order))]
    for q, new_q in order.items():
        for si in range(len(dfa.alphabet)):
            transitions[new_q][si] = order[dfa.transitions[q][si]]
    accepting = frozenset(order[q] for q in dfa.accepting if q in order)
    return Dfa(alphabet=dfa.alphabet,
               transitions=tuple(tuple(r) for r in transitions),
               start=0, accepting=accepting)


def dump_transitions(dfa: Dfa) -> str:
    """Plain-text transition listing for debugging."""
    lines = [f"start: {dfa.start}", f"accepting: {sorted(dfa.accepting)}"]
    for q, row in enumerate(dfa.transitions):
        for ch, t in zip(dfa.alphabet, row):
            lines.append(f"{q} --{ch}--> {t}")
    return "\n".join(lines)


# --- Counting and sampling ------------------------------------------------


@dataclass(frozen=True)
class CountTable:
    """counts[length][state] = number of accepted suffixes of that length."""

    counts: tuple[tuple[int, ...], ...]
    max_len: int

    def members_at(self, length: int, state: int) -> int:
        return self.counts[length][state]


def count_by_length(dfa: Dfa, max_len: int) -> CountTable:
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    rows = [tuple(1 if q in dfa.accepting else 0 for q in range(dfa.n_states))]
    for _ in range(max_len):
        prev = rows[-1]
        rows.append(tuple(sum(prev[t] for t in dfa.transitions[q])
                          for q in range(dfa.n_states)))
    return CountTable(counts=tuple(rows), max_len=max_len)


def feasible_lengths(dfa: Dfa, table: CountTable) -> list[int]:
    """Nonempty lengths in 1..max_len (the empty string is never sampled)."""
    return [l for l in range(1, table.max_len + 1)
            if table.counts[l][dfa.start] > 0]


def sample_member_of_length(dfa: Dfa, table: CountTable, length: int,
                            rng: random.Random) -> str:
    """Uniform draw over the language's length-`length` members."""
    if table.counts[length][dfa.start] == 0:
        raise EmptyLanguageError(f"no members of length {length}")
    state = dfa.start
    out = []
    for remaining in range(length, 0, -1):
        weights = [table.counts[remaining - 1][t] for t in dfa.transitions[state]]
        r = rng.randrange(sum(weights))
        for si, w in enumerate(weights):
            if r < w:
                out.append(dfa.alphabet[si])
                state = dfa.transitions[state][si]
                break
            r -= w
    return "".join(out)


def sample_member(dfa: Dfa, table: CountTable, rng: random.Random) -> str:
    """Length uniform over feasible lengths, then uniform within length."""
    lengths = feasible_lengths(dfa, table)
    if not lengths:
        raise EmptyLanguageError("language has no members within max_len")
    return sample_member_of_length(dfa, table, rng.choice(lengths), rng)


def sample_nonmember(dfa: Dfa, complement_table: CountTable,
                     rng: random.Random) -> str:
    """Uniform draw from the complement, same length law as the positives."""
    return sample_member(dfa.complement(), complement_table, rng)
