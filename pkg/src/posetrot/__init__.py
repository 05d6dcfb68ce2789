"""Rotations and cuts of finite posets.

A rotation rearranges a poset around a downset A and an up-set C above it;
cuts are the C-empty case.  The library decides rotation-equivalence fast via
3-element subsets, cross-checks it with a brute-force cut-closure oracle,
canonicalizes up to rotation plus isomorphism, enumerates classes, realizes
the isomorphism-completeness gadgets, and samples finite random posets for
the one-point-extension machinery.
"""

from .errors import (
    CycleError,
    InvalidRotation,
    InvalidTriple,
    NotAnEmbedding,
    NotDownset,
    PosetError,
    SizeError,
    SizeMismatch,
)
from .poset import (
    Graph,
    Poset,
    antichain,
    below,
    chain,
    delete,
    disjoint_union,
    enumerate_all_posets,
    format_graph,
    format_poset,
    from_pairs,
    graph_from_edges,
    induced,
    is_downset,
    is_upset,
    iso_canonical,
    isomorphic,
    linear_sum,
    max_elements,
    min_elements,
    parse_graph,
    parse_poset,
    reverse,
)
from .rotation import (
    ExtendibleTriple,
    RotationSpec,
    cut,
    decompose_to_single_cuts,
    decompose_to_two_cuts,
    format_rotation_spec,
    from_extension,
    parse_rotation_spec,
    rotate,
    to_extension,
    validate,
)
from .equivalence import (
    TripleClass,
    are_equivalent,
    canonical_form,
    classify_triple,
    equivalent_upto_iso,
    find_rotation,
    rotate_to_unique_max,
)
from .class_explorer import (
    ClassReport,
    ClassStats,
    class_stats,
    enumerate_class,
    oracle_equivalent,
)
from .reductions import (
    graph_isomorphic,
    graph_to_poset,
    iso_to_roteq,
    poset_to_graph,
    roteq_to_iso,
)
from .random_ext import (
    ExtensionType,
    ext_witness,
    pivot_rotation,
    random_poset,
    restriction_check,
)

__version__ = "0.1.0"
