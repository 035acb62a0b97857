"""Words over named generators built from the operations |> and |>-.

A word is an immutable binary tree: leaves are generators, internal nodes
carry one of the two operations.  Equality here is purely syntactic; see
:mod:`qk.freealg` for equality modulo the quandle and rack axioms.

Textual syntax::

    word := atom (('|>' | '|>-') word)?
    atom := generator | '(' word ')'

Both operators are right-associative with equal precedence, so
``x |> x |> y`` is ``x |> (x |> y)``.
"""
from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from qk.errors import ParseError, SizeLimitExceeded

GENERATOR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
MAX_ENUM_SIZE = 4


class Op(enum.IntEnum):
    TRI = 1
    TRI_INV = -1

    @property
    def symbol(self) -> str:
        return "|>" if self is Op.TRI else "|>-"

    def __neg__(self) -> Op:
        return Op(-int(self))


def check_generator(name: str) -> str:
    if not isinstance(name, str) or not GENERATOR_RE.match(name):
        raise ValueError(f"invalid generator name: {name!r}")
    return name


@dataclass(frozen=True)
class Leaf:
    name: str

    def __post_init__(self):
        check_generator(self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Node:
    op: Op
    left: Word
    right: Word

    def __post_init__(self):
        object.__setattr__(self, "op", Op(self.op))

    def __str__(self):
        return to_text(self)


Word = Union[Leaf, Node]


def tri(left: Word, right: Word) -> Node:
    return Node(Op.TRI, left, right)


def tri_inv(left: Word, right: Word) -> Node:
    return Node(Op.TRI_INV, left, right)


def leaf(name: str) -> Leaf:
    return Leaf(name)


# --- structure -----------------------------------------------------------

def size(w: Word) -> int:
    """Number of internal nodes."""
    n = 0
    stack = [w]
    while stack:
        t = stack.pop()
        if isinstance(t, Node):
            n += 1
            stack.append(t.left)
            stack.append(t.right)
    return n


def depth(w: Word) -> int:
    if isinstance(w, Leaf):
        return 0
    return 1 + max(depth(w.left), depth(w.right))


def generators(w: Word) -> frozenset[str]:
    names = set()
    stack = [w]
    while stack:
        t = stack.pop()
        if isinstance(t, Leaf):
            names.add(t.name)
        else:
            stack.append(t.left)
            stack.append(t.right)
    return frozenset(names)


def substitute(w: Word, mapping: Mapping[str, Word]) -> Word:
    """Replace every leaf whose name is in ``mapping`` by the mapped word."""
    if isinstance(w, Leaf):
        return mapping.get(w.name, w)
    return Node(w.op, substitute(w.left, mapping), substitute(w.right, mapping))


def power_word(base_left: str, k: int, inner: Word) -> Word:
    """``base_left |>^k inner``: k-fold left multiplication by ``base_left``.

    Negative k nests |>- instead; k = 0 returns ``inner`` unchanged.
    """
    x = Leaf(check_generator(base_left))
    op = Op.TRI if k > 0 else Op.TRI_INV
    w = inner
    for _ in range(abs(k)):
        w = Node(op, x, w)
    return w


# --- printing ------------------------------------------------------------

def to_text(w: Word) -> str:
    """Canonical rendering with the fewest parentheses right-association allows."""
    parts = []
    while isinstance(w, Node):
        left = to_text(w.left)
        if isinstance(w.left, Node):
            left = f"({left})"
        parts.append(f"{left} {w.op.symbol} ")
        w = w.right
    parts.append(w.name)
    return "".join(parts)


# --- parsing -------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\|>-)|(\|>)|(\()|(\))|([a-z][a-z0-9_]*))")


def _tokens(text: str) -> Iterator[tuple[str, str, int]]:
    """Yield (kind, lexeme, byte offset); a final ("end", "", offset) closes the stream."""
    pos = 0
    byte_pos = 0
    kinds = ("op_inv", "op", "lparen", "rparen", "gen")
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            start = pos + skipped
            byte_start = byte_pos + len(text[pos:start].encode("utf-8"))
            if start == len(text):
                yield ("end", "", byte_start)
                return
            raise ParseError(byte_start, "generator, operator or parenthesis", repr(text[start]))
        start = m.start(m.lastindex)
        byte_start = byte_pos + len(text[pos:start].encode("utf-8"))
        lexeme = m.group(m.lastindex)
        yield (kinds[m.lastindex - 1], lexeme, byte_start)
        byte_pos = byte_start + len(lexeme.encode("utf-8"))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokens(text)
        self.advance()

    def advance(self):
        self.kind, self.lexeme, self.offset = next(self.tokens)

    def fail(self, expected: str):
        found = "end of input" if self.kind == "end" else repr(self.lexeme)
        raise ParseError(self.offset, expected, found)

    def word(self) -> Word:
        # right spine is built iteratively so long power chains don't recurse
        lefts: list[tuple[Word, Op]] = []
        while True:
            atom = self.atom()
            if self.kind == "op":
                op = Op.TRI
            elif self.kind == "op_inv":
                op = Op.TRI_INV
            else:
                break
            self.advance()
            lefts.append((atom, op))
        w = atom
        for left, op in reversed(lefts):
            w = Node(op, left, w)
        return w

    def atom(self) -> Word:
        if self.kind == "gen":
            w = Leaf(self.lexeme)
            self.advance()
            return w
        if self.kind == "lparen":
            self.advance()
            w = self.word()
            if self.kind != "rparen":
                self.fail("')' or operator")
            self.advance()
            return w
        self.fail("generator or '('")


def parse(text: str) -> Word:
    """Parse the textual syntax; raises ParseError with a byte offset."""
    p = _Parser(text)
    w = p.word()
    if p.kind != "end":
        p.fail("operator or end of input")
    return w


# --- enumeration ---------------------------------------------------------

def catalan(m: int) -> int:
    c = 1
    for i in range(m):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def word_count(num_generators: int, num_nodes: int) -> int:
    """Number of words with exactly ``num_nodes`` internal nodes."""
    return catalan(num_nodes) * 2 ** num_nodes * num_generators ** (num_nodes + 1)


def enumerate_words(gens: Iterable[str], max_size: int) -> list[Word]:
    """All words with at most ``max_size`` nodes, ordered by size then printed form."""
    if max_size > MAX_ENUM_SIZE:
        raise SizeLimitExceeded(f"max_size {max_size} exceeds {MAX_ENUM_SIZE}")
    gens = tuple(check_generator(g) for g in gens)

    @functools.lru_cache(maxsize=None)
    def exact(m: int) -> tuple[Word, ...]:
        if m == 0:
            return tuple(Leaf(g) for g in gens)
        out = []
        for m_left in range(m):
            for op in Op:
                for left in exact(m_left):
                    for right in exact(m - 1 - m_left):
                        out.append(Node(op, left, right))
        return tuple(out)

    words = []
    for m in range(max_size + 1):
        words.extend(sorted(exact(m), key=to_text))
    return words
