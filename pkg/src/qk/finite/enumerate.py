"""Exhaustive enumeration of small racks and quandles, and isomorphism testing.

The backtracker assigns whole rows (left multiplications) and propagates the
rack axiom in its automorphism form

    L_a . L_b . L_a^-1 = L_{a |> b},

so once rows a and b are known, row ``a |> b`` is forced.  A complete table
whose rows pass this propagation is exactly a rack.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

from qk.errors import SizeLimitExceeded
from qk.finite.rack import FiniteRack, Table, check_axioms, make_structure

MAX_LABELED = 4
MAX_UP_TO_ISO = 5
MAX_ISOMORPHIC = 8


def _conjugate(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p q p^-1 as a permutation (composition applies the right factor first)."""
    out = [0] * len(p)
    for i, qi in enumerate(q):
        out[p[i]] = p[qi]
    return tuple(out)


def _propagate(rows: list, quandle: bool) -> bool:
    n = len(rows)
    changed = True
    while changed:
        changed = False
        for a in range(n):
            ra = rows[a]
            if ra is None:
                continue
            for b in range(n):
                rb = rows[b]
                if rb is None:
                    continue
                c = ra[b]
                forced = _conjugate(ra, rb)
                rc = rows[c]
                if rc is None:
                    if quandle and forced[c] != c:
                        return False
                    rows[c] = forced
                    changed = True
                elif rc != forced:
                    return False
    return True


def labeled_tables(theory: str, n: int) -> list[Table]:
    """All rack (or quandle) tables on {0..n-1}, ascending."""
    if theory not in ("rack", "quandle"):
        raise ValueError(f"unknown theory {theory!r}")
    quandle = theory == "quandle"
    perms = list(itertools.permutations(range(n)))
    found: list[Table] = []

    def extend(rows: list):
        try:
            i = rows.index(None)
        except ValueError:
            found.append(tuple(rows))
            return
        for p in perms:
            if quandle and p[i] != i:
                continue
            trial = list(rows)
            trial[i] = p
            if _propagate(trial, quandle):
                extend(trial)

    extend([None] * n)
    return sorted(found)


def relabel(table: Table, phi: Sequence[int]) -> Table:
    """Table of the structure transported along the bijection phi."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        pa, row = phi[a], table[a]
        for b in range(n):
            out[pa][phi[b]] = phi[row[b]]
    return tuple(tuple(r) for r in out)


def canonical_form(table: Table) -> Table:
    """Lexicographically least table over all relabelings."""
    n = len(table)
    return min(relabel(table, phi) for phi in itertools.permutations(range(n)))


def enumerate_structures(theory: str, n: int, up_to_iso: bool = True) -> list[FiniteRack]:
    limit = MAX_UP_TO_ISO if up_to_iso else MAX_LABELED
    if n > limit:
        raise SizeLimitExceeded(f"n = {n} exceeds {limit} for this mode")
    if n < 1:
        raise ValueError("n must be positive")
    tables = labeled_tables(theory, n)
    if up_to_iso:
        tables = sorted({canonical_form(t) for t in tables})
    return [make_structure(t, f"{theory}{n}#{i}") for i, t in enumerate(tables)]


def isomorphic(a: FiniteRack, b: FiniteRack) -> Optional[tuple[int, ...]]:
    """A relabeling phi with phi(x |> y) = phi(x) |>' phi(y), or None."""
    return find_isomorphism(a.table, b.table)


def find_isomorphism(ta: Table, tb: Table) -> Optional[tuple[int, ...]]:
    n = len(ta)
    if n > MAX_ISOMORPHIC or len(tb) > MAX_ISOMORPHIC:
        raise SizeLimitExceeded(f"isomorphism search is limited to n <= {MAX_ISOMORPHIC}")
    if len(tb) != n:
        return None

    def signature(t: Table, x: int):
        fixed = sum(1 for v in range(n) if t[x][v] == v)
        return (fixed, t[x][x] == x)

    sig_a = [signature(ta, x) for x in range(n)]
    sig_b = [signature(tb, x) for x in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None

    phi = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        # products that involve element k as a factor or as the result
        for x in range(k + 1):
            for y in range(k + 1):
                z = ta[x][y]
                if k not in (x, y, z):
                    continue
                if z <= k and phi[z] != tb[phi[x]][phi[y]]:
                    return False
        return True

    def assign(k: int) -> bool:
        if k == n:
            return True
        for v in range(n):
            if used[v] or sig_a[k] != sig_b[v]:
                continue
            phi[k] = v
            used[v] = True
            if consistent(k) and assign(k + 1):
                return True
            used[v] = False
        phi[k] = -1
        return False

    if not assign(0):
        return None
    return tuple(phi)


def naive_tables(theory: str, n: int) -> list[Table]:
    """Brute force: every table with permutation rows, filtered by the axiom checker."""
    perms = list(itertools.permutations(range(n)))
    out = []
    for rows in itertools.product(perms, repeat=n):
        report = check_axioms(rows)
        if report.satisfies(theory):
            out.append(report.table)
    return out


def dedup_by_isomorphism(tables: Iterable[Table]) -> list[Table]:
    """One representative per class by pairwise isomorphism search.

    Independent of :func:`canonical_form`; representatives are the first
    member of each class in input order.
    """
    reps: list[Table] = []
    for t in tables:
        if not any(find_isomorphism(t, r) is not None for r in reps):
            reps.append(t)
    return reps
