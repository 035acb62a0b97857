from qk.finite.enumerate import (
    canonical_form,
    dedup_by_isomorphism,
    enumerate_structures,
    find_isomorphism,
    isomorphic,
    labeled_tables,
    naive_tables,
    relabel,
)
from qk.finite.library import (
    D4_TABLE,
    S3_TABLE,
    bundled_library,
    conj_d4,
    conj_s3,
    conj_s4,
    conjugation_quandle,
    constant_rack,
    cyclic_group_table,
    dihedral,
    trivial_quandle,
)
from qk.finite.oracle import Counterexample, search_counterexample, search_space
from qk.finite.rack import (
    AxiomReport,
    DistributivityFails,
    FiniteQuandle,
    FiniteRack,
    IdempotenceFails,
    RowNotBijective,
    canonical_automorphism,
    check_axioms,
    derived_operation,
    eval_left_mults,
    eval_word,
    make_structure,
    power_table,
)
