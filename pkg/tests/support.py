"""Shared test machinery: hypothesis strategies and axiom rewrites on words."""
from __future__ import annotations

import random

from hypothesis import strategies as st

from qk.group import GroupWord, Letter
from qk.term import Leaf, Node, Op, Word


def words(gens=("x", "y"), max_leaves=12) -> st.SearchStrategy[Word]:
    leaves = st.sampled_from([Leaf(g) for g in gens])
    return st.recursive(
        leaves,
        lambda sub: st.builds(Node, st.sampled_from(list(Op)), sub, sub),
        max_leaves=max_leaves,
    )


def letters(gens=("x", "y1", "y2")) -> st.SearchStrategy[Letter]:
    return st.builds(Letter, st.sampled_from(gens), st.sampled_from([1, -1]))


def raw_letter_lists(gens=("x", "y1", "y2"), max_size=20):
    return st.lists(letters(gens), max_size=max_size)


def group_words(gens=("x", "y1", "y2"), max_size=20) -> st.SearchStrategy[GroupWord]:
    return raw_letter_lists(gens, max_size).map(GroupWord)


# --- axiom rewrites ------------------------------------------------------
#
# Each rule maps a subterm to an equal subterm in every rack (or, for the
# idempotence rules, every quandle).  With e, f ranging over both operations
# the distributivity rules include a |> (b |>- c) = (a |> b) |>- (a |> c).

RACK_RULES = ("sd_expand", "sd_collapse", "inv_collapse", "inv_expand")
QUANDLE_RULES = RACK_RULES + ("idem_collapse", "idem_expand")


def _subterms(w: Word, path=()):
    yield path, w
    if isinstance(w, Node):
        yield from _subterms(w.left, path + ("l",))
        yield from _subterms(w.right, path + ("r",))


def _replace(w: Word, path, new: Word) -> Word:
    if not path:
        return new
    if path[0] == "l":
        return Node(w.op, _replace(w.left, path[1:], new), w.right)
    return Node(w.op, w.left, _replace(w.right, path[1:], new))


def _apply(rule: str, t: Word, rng: random.Random, gens):
    """Rewritten subterm, or None when ``rule`` does not match ``t``."""
    if rule == "idem_collapse":
        if isinstance(t, Node) and t.left == t.right:
            return t.left
    elif rule == "idem_expand":
        return Node(rng.choice(list(Op)), t, t)
    elif rule == "sd_expand":
        if isinstance(t, Node) and isinstance(t.right, Node):
            a, e = t.left, t.op
            b, f, c = t.right.left, t.right.op, t.right.right
            return Node(f, Node(e, a, b), Node(e, a, c))
    elif rule == "sd_collapse":
        if (
            isinstance(t, Node)
            and isinstance(t.left, Node)
            and isinstance(t.right, Node)
            and t.left.op == t.right.op
            and t.left.left == t.right.left
        ):
            e, a = t.left.op, t.left.left
            return Node(e, a, Node(t.op, t.left.right, t.right.right))
    elif rule == "inv_collapse":
        if (
            isinstance(t, Node)
            and isinstance(t.right, Node)
            and t.right.op == -t.op
            and t.right.left == t.left
        ):
            return t.right.right
    elif rule == "inv_expand":
        a = Leaf(rng.choice(gens)) if rng.random() < 0.7 else t
        e = rng.choice(list(Op))
        return Node(e, a, Node(-e, a, t))
    else:
        raise ValueError(rule)
    return None


def perturb(w: Word, rules, rng: random.Random, steps: int, gens=("x", "y")) -> Word:
    """Apply ``steps`` randomly chosen applicable rewrites at random positions."""
    for _ in range(steps):
        options = []
        for path, t in _subterms(w):
            for rule in rules:
                if rule.endswith("_expand") and rule != "sd_expand":
                    options.append((path, t, rule))
                elif _apply(rule, t, rng, gens) is not None:
                    options.append((path, t, rule))
        path, t, rule = rng.choice(options)
        w = _replace(w, path, _apply(rule, t, rng, gens))
    return w


# --- acceptance reporting ------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def record(line: str):
    ACCEPTANCE_LINES.append(line)
    print(line)
