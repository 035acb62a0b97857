"""Decide whether a two-variable word induces an endofunctor of quandles or racks.

The decision itself reads the normal form: a word is a quandle endofunctor iff
its free-quandle normal form is (x^k, y), and a rack endofunctor iff its
free-rack normal form is (x^k y^j, y).  Alongside, the one-relator witness is
computed from the two substitutions y -> y1 and y -> y2: the relator
w1 w2^-1 is cyclically reduced and its surviving generators recorded.  For
quandles the two routes are required to agree and a disagreement raises
:class:`InternalInvariantViolation`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from qk.errors import InternalInvariantViolation, WrongVariables
from qk.freealg import quandle_image, quandle_nf, rack_nf
from qk.group import (
    GroupWord,
    as_conjugate_power,
    as_two_block_power,
    concat,
    cyclic_reduce,
    invert,
)
from qk.term import Word, generators

X, Y, Y1, Y2 = "x", "y", "y1", "y2"
SUBST_1 = {X: X, Y: Y1}
SUBST_2 = {X: X, Y: Y2}
PAPER_RELATOR = GroupWord.of(Y1, (Y2, -1))


class Reason(enum.Enum):
    X_SURVIVES = "XSurvives"
    RELATOR_TRIVIAL = "RelatorTrivial"
    BASE_NOT_Y = "BaseNotY"
    PREFIX_NOT_TWO_BLOCK = "PrefixNotTwoBlock"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RefutationTrace:
    w1: GroupWord
    w2: GroupWord
    relator: GroupWord
    cyclically_reduced: GroupWord
    survivors: frozenset[str]
    reason: Optional[Reason] = None


@dataclass(frozen=True)
class QuandlePower:
    k: int

    def __str__(self):
        return f"QuandlePower k={self.k}"


@dataclass(frozen=True)
class RackPower:
    k: int
    j: int

    def __str__(self):
        return f"RackPower k={self.k} j={self.j}"


@dataclass(frozen=True)
class NotEndofunctor:
    trace: RefutationTrace

    @property
    def reason(self) -> Reason:
        return self.trace.reason

    def __str__(self):
        return f"NotEndofunctor reason={self.trace.reason}"


Classification = Union[QuandlePower, RackPower, NotEndofunctor]


def _check_variables(w: Word):
    extra = generators(w) - {X, Y}
    if extra:
        raise WrongVariables(
            f"word must use only x and y, found {', '.join(sorted(extra))}"
        )


def one_relator_test(w: Word) -> RefutationTrace:
    """Images w1, w2 under y -> y1, y -> y2 and the cyclic reduction of w1 w2^-1.

    The returned trace has no reason; the classifiers attach one.
    """
    _check_variables(w)
    w1 = quandle_image(w, SUBST_1)
    w2 = quandle_image(w, SUBST_2)
    relator = concat(w1, invert(w2))
    reduced = cyclic_reduce(relator)
    return RefutationTrace(w1, w2, relator, reduced, reduced.generators())


def _with_reason(trace: RefutationTrace, reason: Reason) -> RefutationTrace:
    return RefutationTrace(
        trace.w1, trace.w2, trace.relator, trace.cyclically_reduced, trace.survivors, reason
    )


def classify_quandle(w: Word) -> Classification:
    trace = one_relator_test(w)
    nf = quandle_nf(w)
    k = None
    if nf.base == Y and all(a.gen == X for a in nf.prefix):
        k = sum(a.sign for a in nf.prefix)

    # the normal-form verdict and the relator verdict must coincide
    relator_says_power = trace.cyclically_reduced == PAPER_RELATOR
    if relator_says_power != (k is not None):
        raise InternalInvariantViolation(
            f"normal form and relator disagree on {w}: nf=({nf.prefix}, {nf.base}), "
            f"cyclic reduction {trace.cyclically_reduced}"
        )
    if k is not None:
        k1 = as_conjugate_power(trace.w1, X, Y1)
        if k1 != k:
            raise InternalInvariantViolation(
                f"exponent mismatch on {w}: normal form gives {k}, w1 = {trace.w1}"
            )
        return QuandlePower(k)

    if X in trace.survivors:
        reason = Reason.X_SURVIVES
    elif not trace.relator:
        reason = Reason.RELATOR_TRIVIAL
    else:
        reason = Reason.BASE_NOT_Y
    return NotEndofunctor(_with_reason(trace, reason))


def classify_rack(w: Word) -> Classification:
    trace = one_relator_test(w)
    nf = rack_nf(w)
    if nf.base == Y:
        kj = as_two_block_power(nf.prefix, X, Y)
        if kj is not None:
            return RackPower(*kj)
        # the relator only sees the quandle shadow, so blame the prefix shape
        reason = Reason.PREFIX_NOT_TWO_BLOCK
    elif X in trace.survivors:
        reason = Reason.X_SURVIVES
    elif not trace.relator:
        reason = Reason.RELATOR_TRIVIAL
    else:
        reason = Reason.BASE_NOT_Y
    return NotEndofunctor(_with_reason(trace, reason))


def classify(w: Word, theory: str) -> Classification:
    if theory == "quandle":
        return classify_quandle(w)
    if theory == "rack":
        return classify_rack(w)
    raise ValueError(f"unknown theory {theory!r}")
