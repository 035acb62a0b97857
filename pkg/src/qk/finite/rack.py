"""Finite racks and quandles given by operation tables.

``table[a][b]`` is ``a |> b``.  Row ``a`` is the left multiplication by
``a``, which must be a permutation; ``|>-`` uses the inverse permutation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional, Sequence, Union

from qk.errors import (
    InternalInvariantViolation,
    MalformedTable,
    NotARack,
    UnboundGenerator,
)
from qk.freealg import LeftMultSequence
from qk.term import Leaf, Op, Word

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RowNotBijective:
    row: int

    def recheck(self, table: Sequence[Sequence[int]]) -> bool:
        return len(set(table[self.row])) != len(table)

    def __str__(self):
        return f"RowNotBijective({self.row})"


@dataclass(frozen=True)
class DistributivityFails:
    a: int
    b: int
    c: int

    def recheck(self, table: Sequence[Sequence[int]]) -> bool:
        a, b, c = self.a, self.b, self.c
        return table[a][table[b][c]] != table[table[a][b]][table[a][c]]

    def __str__(self):
        return f"DistributivityFails({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class IdempotenceFails:
    a: int

    def recheck(self, table: Sequence[Sequence[int]]) -> bool:
        return table[self.a][self.a] != self.a

    def __str__(self):
        return f"IdempotenceFails({self.a})"


Witness = Union[RowNotBijective, DistributivityFails, IdempotenceFails]


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking a table against the rack and quandle axioms.

    Each axiom carries its own lexicographically minimal witness when it
    fails; ``witness`` is the first of them in the order bijectivity,
    distributivity, idempotence.
    """

    table: Table
    bijectivity: Optional[RowNotBijective] = None
    distributivity: Optional[DistributivityFails] = None
    idempotence: Optional[IdempotenceFails] = None

    @property
    def is_rack(self) -> bool:
        return self.bijectivity is None and self.distributivity is None

    @property
    def is_quandle(self) -> bool:
        return self.is_rack and self.idempotence is None

    @property
    def witness(self) -> Optional[Witness]:
        return self.bijectivity or self.distributivity or self.idempotence

    def satisfies(self, theory: str) -> bool:
        if theory == "rack":
            return self.is_rack
        if theory == "quandle":
            return self.is_quandle
        raise ValueError(f"unknown theory {theory!r}")

    def failing_witness(self, theory: str) -> Optional[Witness]:
        """Witness against ``theory``; idempotence is ignored for racks."""
        if theory == "rack":
            return self.bijectivity or self.distributivity
        return self.witness


def as_table(rows: Sequence[Sequence[int]]) -> Table:
    """Validate shape and range and freeze into a tuple table."""
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"table entries must be integers: {exc}") from None
    n = len(table)
    if n == 0:
        raise MalformedTable("table is empty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"entry ({i},{j}) = {v} is outside [0, {n})")
    return table


def check_axioms(rows: Sequence[Sequence[int]]) -> AxiomReport:
    t = as_table(rows)
    n = len(t)
    bij = next((RowNotBijective(i) for i in range(n) if len(set(t[i])) != n), None)
    dist = None
    for a in range(n):
        ra = t[a]
        for b in range(n):
            rb, rab = t[b], t[ra[b]]
            for c in range(n):
                if ra[rb[c]] != rab[ra[c]]:
                    dist = DistributivityFails(a, b, c)
                    break
            if dist:
                break
        if dist:
            break
    idem = next((IdempotenceFails(a) for a in range(n) if t[a][a] != a), None)
    return AxiomReport(t, bij, dist, idem)


def _inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


@dataclass(frozen=True)
class FiniteRack:
    table: Table
    name: Optional[str] = field(default=None, compare=False)

    theory = "rack"

    def __post_init__(self):
        t = as_table(self.table)
        object.__setattr__(self, "table", t)
        report = check_axioms(t)
        w = report.failing_witness(self.theory)
        if w is not None:
            raise NotARack(f"table is not a {self.theory}: {w}")

    @property
    def n(self) -> int:
        return len(self.table)

    @cached_property
    def inverse_table(self) -> Table:
        return tuple(_inverse_perm(row) for row in self.table)

    @property
    def is_quandle(self) -> bool:
        return all(self.table[a][a] == a for a in range(self.n))

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def op_inv(self, a: int, b: int) -> int:
        return self.inverse_table[a][b]

    def __str__(self):
        return self.name or f"{self.theory}({self.n})"


@dataclass(frozen=True)
class FiniteQuandle(FiniteRack):
    theory = "quandle"


def make_structure(rows: Sequence[Sequence[int]], name: Optional[str] = None) -> FiniteRack:
    """FiniteQuandle when idempotent, otherwise FiniteRack."""
    t = as_table(rows)
    if all(t[a][a] == a for a in range(len(t))):
        return FiniteQuandle(t, name)
    return FiniteRack(t, name)


def eval_word(r: FiniteRack, w: Word, env: Mapping[str, int]) -> int:
    if isinstance(w, Leaf):
        try:
            return env[w.name]
        except KeyError:
            raise UnboundGenerator(f"generator {w.name!r} has no value") from None
    # walk the right spine iteratively, then apply left multiplications inside out
    spine = []
    while not isinstance(w, Leaf):
        spine.append((w.op, eval_word(r, w.left, env)))
        w = w.right
    v = eval_word(r, w, env)
    for op, a in reversed(spine):
        v = r.table[a][v] if op is Op.TRI else r.inverse_table[a][v]
    return v


def eval_left_mults(r: FiniteRack, seq: LeftMultSequence, env: Mapping[str, int]) -> int:
    try:
        v = env[seq.base]
        for step in reversed(seq.steps.letters):
            a = env[step.gen]
            v = r.table[a][v] if step.sign == 1 else r.inverse_table[a][v]
    except KeyError as exc:
        raise UnboundGenerator(f"generator {exc.args[0]!r} has no value") from None
    return v


def derived_operation(r: FiniteRack, w: Word) -> Table:
    """Table of the binary operation (a, b) -> w(x=a, y=b)."""
    n = r.n
    return tuple(
        tuple(eval_word(r, w, {"x": a, "y": b}) for b in range(n)) for a in range(n)
    )


def _perm_power(p: Sequence[int], k: int) -> tuple[int, ...]:
    if k < 0:
        p, k = _inverse_perm(p), -k
    out = list(range(len(p)))
    for _ in range(k):
        out = [p[i] for i in out]
    return tuple(out)


def power_table(r: FiniteRack, k: int) -> FiniteRack:
    """Rack whose left multiplications are the k-th powers of those of ``r``."""
    cls = FiniteQuandle if isinstance(r, FiniteQuandle) else FiniteRack
    name = f"{r.name}^{k}" if r.name else None
    return cls(tuple(_perm_power(row, k) for row in r.table), name)


def canonical_automorphism(r: FiniteRack) -> tuple[int, ...]:
    """The map a -> a |> a, checked to be a bijective endomorphism."""
    t = r.table
    f = tuple(t[a][a] for a in range(r.n))
    if len(set(f)) != r.n:
        raise InternalInvariantViolation("a |> a is not a bijection")
    for a in range(r.n):
        for b in range(r.n):
            if f[t[a][b]] != t[f[a]][f[b]]:
                raise InternalInvariantViolation(
                    f"a |> a is not an endomorphism at ({a},{b})"
                )
    return f
