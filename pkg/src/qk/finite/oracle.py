"""Brute-force search for finite structures on which a word's derived operation breaks the axioms."""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

from qk.finite.enumerate import MAX_LABELED, enumerate_structures
from qk.finite.library import bundled_library
from qk.finite.rack import AxiomReport, FiniteRack, check_axioms, derived_operation
from qk.term import Word


class Counterexample(NamedTuple):
    structure: FiniteRack
    report: AxiomReport


def models(theory: str, library: Iterable[FiniteRack]) -> Iterator[FiniteRack]:
    for r in library:
        if theory == "rack" or r.is_quandle:
            yield r


def search_space(theory: str, library: Iterable[FiniteRack], max_enum_size: int) -> Iterator[FiniteRack]:
    """Library members that model ``theory``, then enumerated structures by size."""
    if max_enum_size > MAX_LABELED:
        raise ValueError(f"max_enum_size is limited to {MAX_LABELED}")
    yield from models(theory, library)
    for n in range(1, max_enum_size + 1):
        yield from enumerate_structures(theory, n, up_to_iso=True)


def search_counterexample(
    w: Word,
    theory: str,
    library: Optional[Iterable[FiniteRack]] = None,
    max_enum_size: int = MAX_LABELED,
) -> Optional[Counterexample]:
    """First structure whose derived operation for ``w`` is not a model of ``theory``."""
    if library is None:
        library = bundled_library()
    for r in search_space(theory, library, max_enum_size):
        report = check_axioms(derived_operation(r, w))
        if not report.satisfies(theory):
            return Counterexample(r, report)
    return None
