"""Words in free groups: free and cyclic reduction, and block-shape recognizers.

A :class:`GroupWord` is always freely reduced; constructing one from an
arbitrary letter sequence reduces it with a single left-to-right stack pass.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from qk.term import check_generator


@dataclass(frozen=True, order=True)
class Letter:
    gen: str
    sign: int

    def __post_init__(self):
        check_generator(self.gen)
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)

    def __str__(self):
        return self.gen if self.sign == 1 else f"{self.gen}^-1"


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for a in letters:
        if stack and stack[-1].gen == a.gen and stack[-1].sign == -a.sign:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def is_reduced(letters: Iterable[Letter]) -> bool:
    letters = tuple(letters)
    return all(
        not (a.gen == b.gen and a.sign == -b.sign) for a, b in zip(letters, letters[1:])
    )


class GroupWord:
    """Freely reduced word; the empty word is the identity."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("GroupWord is immutable")

    @classmethod
    def of(cls, *spec: tuple[str, int] | str) -> GroupWord:
        """Shorthand: ``GroupWord.of("x", ("y", -1))`` is x y^-1."""
        letters = []
        for s in spec:
            letters.append(Letter(s, 1) if isinstance(s, str) else Letter(*s))
        return cls(letters)

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        """Inverse of ``str``: space-separated tokens ``x`` / ``x^-1``; ``1`` is the identity."""
        letters = []
        for tok in text.split():
            if tok == "1":
                continue
            if tok.endswith("^-1"):
                letters.append(Letter(tok[:-3], -1))
            else:
                letters.append(Letter(tok, 1))
        return cls(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return concat(self, other)

    def __invert__(self) -> GroupWord:
        return invert(self)

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "1"

    def __repr__(self):
        return f"GroupWord({str(self)!r})"

    def generators(self) -> frozenset[str]:
        return frozenset(a.gen for a in self.letters)

    def exponent_sums(self) -> dict[str, int]:
        sums: Counter[str] = Counter()
        for a in self.letters:
            sums[a.gen] += a.sign
        return {g: s for g, s in sums.items() if s}


IDENTITY = GroupWord()


def concat(*words: GroupWord) -> GroupWord:
    """Product of the words, freely reduced."""
    if len(words) == 1:
        return words[0]
    out: list[Letter] = []
    for w in words:
        for a in w.letters:
            if out and out[-1].gen == a.gen and out[-1].sign == -a.sign:
                out.pop()
            else:
                out.append(a)
    return GroupWord(out)


def invert(a: GroupWord) -> GroupWord:
    return GroupWord(x.inverse() for x in reversed(a.letters))


def power(a: GroupWord, k: int) -> GroupWord:
    base = a if k >= 0 else invert(a)
    return concat(*([base] * abs(k))) if k else IDENTITY


def cyclic_reduce(a: GroupWord) -> GroupWord:
    """Strip mutually inverse first/last letter pairs until none remain."""
    letters = a.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i].gen == letters[j].gen and letters[i].sign == -letters[j].sign:
        i += 1
        j -= 1
    return GroupWord(letters[i : j + 1])


def surviving_generators(a: GroupWord) -> frozenset[str]:
    """Generators that cyclic reduction cannot eliminate."""
    return cyclic_reduce(a).generators()


def _runs(a: GroupWord) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    for x in a.letters:
        if runs and runs[-1][0] == x.gen:
            runs[-1] = (x.gen, runs[-1][1] + x.sign)
        else:
            runs.append((x.gen, x.sign))
    return runs


def as_conjugate_power(a: GroupWord, axis: str, target: str) -> Optional[int]:
    """Return k if ``a`` is axis^k target axis^-k, else None."""
    if axis == target:
        raise ValueError("axis and target must differ")
    runs = _runs(a)
    if len(runs) == 1 and runs[0] == (target, 1):
        return 0
    if len(runs) == 3 and runs[1] == (target, 1):
        (g0, k), _, (g2, k2) = runs
        if g0 == axis and g2 == axis and k2 == -k:
            return k
    return None


def as_two_block_power(a: GroupWord, first: str, second: str) -> Optional[tuple[int, int]]:
    """Return (k, j) if ``a`` is first^k second^j, else None."""
    if first == second:
        raise ValueError("first and second must differ")
    runs = _runs(a)
    if not runs:
        return (0, 0)
    if len(runs) == 1:
        g, e = runs[0]
        if g == first:
            return (e, 0)
        if g == second:
            return (0, e)
        return None
    if len(runs) == 2 and runs[0][0] == first and runs[1][0] == second:
        return (runs[0][1], runs[1][1])
    return None
