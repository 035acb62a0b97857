"""Normal forms in free quandles and free racks.

Every element of a free rack is a composition of left multiplications by
generators applied to a generator.  The left multiplication by a compound
element is rewritten with the inner-automorphism identity

    L_{P(g)} = P . L_g . P^-1

(its simplest instance is ``(x |> y) |> - = x |> (y |> (x |>- -))``), so one
structural recursion yields the whole step sequence.  Reading the steps as a
free-group word W, the rack element is the pair (W, base); in a quandle the
element is the conjugate W base W^-1, so trailing powers of the base letter
can be dropped from W.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from qk.errors import MissingRename
from qk.group import GroupWord, Letter, concat, invert
from qk.term import Leaf, Node, Op, Word

# a step z |>^e - is the letter z^e
SignedGen = Letter


@dataclass(frozen=True)
class LeftMultSequence:
    """``steps[0] |>^e0 (steps[1] |>^e1 (... (steps[-1] |>^e base)))``."""

    steps: GroupWord
    base: str

    def to_word(self) -> Word:
        w: Word = Leaf(self.base)
        for s in reversed(self.steps.letters):
            w = Node(Op(s.sign), Leaf(s.gen), w)
        return w


@dataclass(frozen=True)
class ConjugateForm:
    """Free-quandle element prefix . base . prefix^-1."""

    prefix: GroupWord
    base: str

    def element(self) -> GroupWord:
        return concat(self.prefix, GroupWord([Letter(self.base, 1)]), invert(self.prefix))


@dataclass(frozen=True)
class RackNormalForm:
    """Free-rack element: the left multiplications ``prefix`` applied to ``base``."""

    prefix: GroupWord
    base: str


def to_left_mults(w: Word) -> LeftMultSequence:
    if isinstance(w, Leaf):
        return LeftMultSequence(GroupWord(), w.name)
    # iterate down the right spine; only left children recurse
    parts: list[GroupWord] = []
    while isinstance(w, Node):
        u = to_left_mults(w.left)
        step = GroupWord([Letter(u.base, int(w.op))])
        parts.append(concat(u.steps, step, invert(u.steps)))
        w = w.right
    return LeftMultSequence(concat(*parts), w.name)


def quandle_nf(w: Word) -> ConjugateForm:
    seq = to_left_mults(w)
    letters = seq.steps.letters
    end = len(letters)
    while end and letters[end - 1].gen == seq.base:
        end -= 1
    return ConjugateForm(GroupWord(letters[:end]), seq.base)


def rack_nf(w: Word) -> RackNormalForm:
    seq = to_left_mults(w)
    return RackNormalForm(seq.steps, seq.base)


def quandle_image(w: Word, rename: Optional[Mapping[str, str]] = None) -> GroupWord:
    """Image of ``w`` in the conjugation quandle of the free group.

    Leaves map to the renamed generator (identity when ``rename`` is None);
    ``u |> v`` maps to U V U^-1 and ``u |>- v`` to U^-1 V U.
    """

    def image(t: Word) -> GroupWord:
        if isinstance(t, Leaf):
            if rename is None:
                return GroupWord([Letter(t.name, 1)])
            if t.name not in rename:
                raise MissingRename(f"no image for generator {t.name!r}")
            return GroupWord([Letter(rename[t.name], 1)])
        u = image(t.left)
        v = image(t.right)
        if t.op is Op.TRI:
            return concat(u, v, invert(u))
        return concat(invert(u), v, u)

    return image(w)
