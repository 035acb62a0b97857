"""Standard finite racks and quandles used as counterexample material."""
from __future__ import annotations

import itertools
from typing import Sequence

from qk.errors import MalformedTable, NotAGroup
from qk.finite.rack import FiniteQuandle, FiniteRack, as_table


def dihedral(n: int) -> FiniteQuandle:
    """Dihedral quandle: i |> j = 2i - j mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    return FiniteQuandle(
        tuple(tuple((2 * i - j) % n for j in range(n)) for i in range(n)), f"dihedral({n})"
    )


def trivial_quandle(n: int) -> FiniteQuandle:
    return FiniteQuandle(tuple(tuple(range(n)) for _ in range(n)), f"trivial({n})")


def constant_rack(n: int) -> FiniteRack:
    """Every left multiplication is the cycle j -> j + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    row = tuple((j + 1) % n for j in range(n))
    cls = FiniteQuandle if n == 1 else FiniteRack
    return cls(tuple(row for _ in range(n)), f"constant({n})")


def _group_inverses(mult) -> list[int]:
    n = len(mult)
    identities = [e for e in range(n) if all(mult[e][a] == a == mult[a][e] for a in range(n))]
    if not identities:
        raise NotAGroup("no identity element")
    e = identities[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
            raise NotAGroup(f"associativity fails at ({a},{b},{c})")
    inv = []
    for a in range(n):
        found = [b for b in range(n) if mult[a][b] == e]
        if not found:
            raise NotAGroup(f"element {a} has no inverse")
        inv.append(found[0])
    return inv


def conjugation_quandle(mult: Sequence[Sequence[int]], name: str | None = None) -> FiniteQuandle:
    """Quandle a |> b = a b a^-1 on a group given by its multiplication table."""
    try:
        mult = as_table(mult)
    except MalformedTable as exc:
        raise NotAGroup(str(exc)) from None
    inv = _group_inverses(mult)
    n = len(mult)
    table = tuple(tuple(mult[mult[i][j]][inv[i]] for j in range(n)) for i in range(n))
    return FiniteQuandle(table, name)


def permutation_group_table(perms: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Multiplication table of a closed list of permutations, (p q)(i) = p(q(i))."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    try:
        return tuple(
            tuple(index[tuple(p[i] for i in q)] for q in perms) for p in perms
        )
    except KeyError:
        raise NotAGroup("permutations are not closed under composition") from None


def _closure(gens: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[i] for i in g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def cyclic_group_table(n: int):
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


# permutations listed in lexicographic order; index 0 is the identity
S3_TABLE = permutation_group_table(sorted(itertools.permutations(range(3))))
# symmetries of a square acting on its vertices 0..3
D4_TABLE = permutation_group_table(_closure([(1, 2, 3, 0), (0, 3, 2, 1)]))


def conj_s3() -> FiniteQuandle:
    return conjugation_quandle(S3_TABLE, "conj(S3)")


def conj_d4() -> FiniteQuandle:
    return conjugation_quandle(D4_TABLE, "conj(D4)")


def bundled_library() -> list[FiniteRack]:
    """Hand-picked structures; enumerated ones are added by the oracle."""
    lib: list[FiniteRack] = [dihedral(n) for n in range(2, 8)]
    lib += [conj_s3(), conj_d4()]
    lib += [constant_rack(n) for n in range(2, 5)]
    lib += [trivial_quandle(n) for n in range(1, 5)]
    return lib


def conj_s4() -> FiniteQuandle:
    """Not bundled; refutes some words the bundled library cannot."""
    return conjugation_quandle(
        permutation_group_table(sorted(itertools.permutations(range(4)))), "conj(S4)"
    )
