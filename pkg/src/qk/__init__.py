"""Endofunctors of the algebraic theories of quandles and racks.

Symbolic classification of two-variable words, with finite racks and
quandles as a brute-force cross-check.
"""
from qk.classify import (
    NotEndofunctor,
    QuandlePower,
    RackPower,
    Reason,
    RefutationTrace,
    classify_quandle,
    classify_rack,
    one_relator_test,
)
from qk.freealg import quandle_image, quandle_nf, rack_nf, to_left_mults
from qk.group import GroupWord, Letter
from qk.term import Leaf, Node, Op, enumerate_words, parse, power_word, to_text

__version__ = "0.1.0"
