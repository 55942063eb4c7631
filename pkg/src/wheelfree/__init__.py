"""wheelfree: recognition of graphs with no induced wheel or antiwheel.

A wheel is a chordless cycle of length at least four plus a vertex with
at least three neighbors on it; an antiwheel is a wheel of the
complement.  This package decides whether a graph contains either, and
always produces a certificate an independent checker can confirm: a
structural decomposition when the graph is free, or an explicit witness
on at most seven vertices when it is not.
"""

from .graph import (
    FormatError,
    Graph,
    complement,
    connected_components,
    induced,
    is_clique,
    is_stable,
    make_graph,
    parse_edgelist,
    parse_graph6,
    relabel,
    serialize_edgelist,
    serialize_graph6,
    set_relation,
)
from .oracle import (
    CapExceeded,
    Hole,
    PATTERNS,
    WheelWitness,
    contains_pattern,
    find_holes,
    find_small_antiwheel,
    find_small_wheel,
    find_wheel_exhaustive,
)
from .chain import (
    Bipartition,
    ChainDecomposition,
    OddCycle,
    bipartition,
    chain_decomposition,
    dominating_vertices,
    is_chain,
)
from .recognizer import (
    Classification,
    ClassificationError,
    ClassADecomposition,
    ClassBDecomposition,
    ClassCDecomposition,
    SplitPartition,
    classification_error,
    classify,
    is_k_hole,
    recognize_class_a,
    recognize_class_b,
    recognize_class_c,
    split_partition,
    verify_classification,
)
from .generators import (
    gen_chain,
    gen_class_a,
    gen_class_b,
    gen_class_c,
    gen_random,
    gen_split,
    shuffled,
)
from .harness import (
    AgreementReport,
    check_theorem,
    enumerate_labeled,
    run_exhaustive,
    run_graph6_lines,
    run_sampled,
)
from .documents import from_document, to_document

__version__ = "0.1.0"
