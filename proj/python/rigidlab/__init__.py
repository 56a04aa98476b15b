"""Python bindings for rigidlab."""

from ._core import (
    CapacityError,
    Coloring,
    ExtractionError,
    Group,
    InputError,
    Layout,
    QuasiOrder,
    Tree,
    attempt_tree_size,
    automorphisms,
    build_group,
    build_h_family,
    ef_equiv,
    embeds,
    find_embedding,
    hom_dimension,
    invariant_factors,
    p_length,
    run_cli,
    search_shift_invariant,
)

__all__ = [name for name in dir() if not name.startswith("_")]
